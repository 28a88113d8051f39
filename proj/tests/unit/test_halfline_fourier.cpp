#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "phgosc/compactification.hpp"
#include "phgosc/errors.hpp"
#include "phgosc/halfline_fourier.hpp"

using namespace phgosc;

TEST_CASE("monomial transform examples") {
    CHECK(std::abs(monomial_transform({0.0, 0, 2}) - cplx(0, 0.5)) < 1e-15);
    CHECK(std::abs(monomial_transform({1.0, 0, 1}) - cplx(-1)) < 1e-15);
    CHECK(std::abs(monomial_transform({0.5, 0, 1}) - std::sqrt(M_PI) / 2 * std::exp(cplx(0, 0.75 * M_PI))) < 1e-15);
    CHECK(std::abs(monomial_transform({0.0, 0, -1}) - cplx(0, -1)) < 1e-15);
    CHECK_THROWS_AS(monomial_transform({0.0, 0, 0}), DomainError);
    CHECK_THROWS_AS(monomial_transform({-1.0, 0, 1}), IntegrabilityError);
    CHECK_THROWS_AS(monomial_transform({cplx(-1.5, 2), 0, 1}), IntegrabilityError);
}

TEST_CASE("monomial transform against the regularized oracle") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> jd(-0.7, 3.0), ld(0.5, 2.0);
    for (int i = 0; i < 90; ++i) {
        const double j = jd(rng);
        const int k = i % 3;
        const double tau = (i % 2 ? 1 : -1) * std::pow(10.0, ld(rng));
        const cplx f = monomial_transform({j, k, tau});
        const cplx o = oracle::monomial_transform(j, k, tau);
        CHECK_MESSAGE(std::abs(f - o) <= 1e-6 * std::abs(o), "j " << j << " k " << k << " tau " << tau);
    }
}

TEST_CASE("numeric half-line transform") {
    QuadResult box = numeric_halfline_fourier([](double) { return cplx(1); }, 1, M_PI, 1e-13);
    CHECK(std::abs(box.value - cplx(0, 2 / M_PI)) < 1e-13);
    QuadResult e = numeric_halfline_fourier([](double x) { return cplx(std::exp(-x)); }, 40, 1, 1e-13);
    CHECK(std::abs(e.value - cplx(0.5, 0.5)) < 1e-13);
    CHECK_THROWS_AS(numeric_halfline_fourier([](double) { return cplx(1); }, 0, 1, 1e-10), DomainError);
}

TEST_CASE("expansion of a compactly supported function") {
    // f = e^{-xi} chi(xi): the expansion at xi = 0 is that of e^{-xi}
    std::vector<PhgTerm> terms;
    double c = 1;
    for (int n = 0; n <= 6; ++n, c /= -n) terms.push_back({double(n), 0, constant_coeff(c)});
    PhgSeries in(terms, 6, "xi");
    auto f = [](double x) { return cplx(std::exp(-x) * time_cutoff_chi(x)); };
    for (int sign : {1, -1}) {
        PhgSeries fe = phg_fourier_expansion(in, 6, sign);
        CHECK_FALSE(fe.empty());
        double prev = 0;
        for (double tau : {50.0, 100.0, 200.0}) {
            const double st = sign * tau;
            const cplx num = numeric_halfline_fourier(f, 2, st, 1e-14).value;
            const double err = std::abs(eval_fourier_expansion(fe, st) - num);
            if (prev > 0) CHECK(err < prev);
            prev = err;
        }
        CHECK(prev < 1e-7);
    }
    CHECK(phg_fourier_expansion(PhgSeries({}, 3), 3, 1).empty());
    CHECK_THROWS_AS(phg_fourier_expansion(PhgSeries({{-1.0, 0, constant_coeff(1)}}, 3), 3, 1), IntegrabilityError);
    CHECK_THROWS_AS(phg_fourier_expansion(in, 3, 0), DomainError);
    CHECK_THROWS_AS(eval_fourier_expansion(phg_fourier_expansion(in, 3, 1), 0), DomainError);
}

TEST_CASE("log terms in the expansion") {
    // xi^{1/2} log xi on [0, support]: leading transform term only
    PhgSeries in({{0.5, 1, constant_coeff(1)}}, 0.5, "xi");
    PhgSeries fe = phg_fourier_expansion(in, 0.5, 1);
    const double tau = 30;
    CHECK(std::abs(eval_fourier_expansion(fe, tau) - monomial_transform({0.5, 1, tau})) < 1e-14);
}
