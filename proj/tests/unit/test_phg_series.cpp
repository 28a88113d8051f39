#include <cmath>
#include <sstream>

#include "doctest.h"
#include "phgosc/errors.hpp"
#include "phgosc/phg_series.hpp"
#include "phgosc/profiles.hpp"

using namespace phgosc;

TEST_CASE("series construction checks its invariants") {
    CHECK_THROWS_AS(PhgSeries({{0.0, 0, constant_coeff(1)}, {0.0, 0, constant_coeff(2)}}, 3), DomainError);
    CHECK_THROWS_AS(PhgSeries({{4.0, 0, constant_coeff(1)}}, 3), DomainError);
}

TEST_CASE("truncate") {
    PhgSeries s({{0.0, 0, constant_coeff(1)}, {1.0, 0, constant_coeff(2)}}, 2);
    PhgSeries t = truncate(s, 0.5);
    REQUIRE(t.terms().size() == 1);
    CHECK(t.terms()[0].j == cplx(0));
    CHECK(t.remainder_order() == 0.5);
    CHECK(truncate(s, 2).terms().size() == 2);
    CHECK(truncate(PhgSeries({}, 5), 1).empty());
    CHECK_THROWS_AS(truncate(s, 2.5), InvalidTruncation);
}

TEST_CASE("eval_series") {
    CHECK(eval_series(PhgSeries({{0.0, 0, constant_coeff(3.5)}}, 1), 0.37) == cplx(3.5));
    CHECK(std::abs(eval_series(PhgSeries({{1.0, 1, constant_coeff(1)}}, 2), std::exp(-1.0)) + std::exp(-1.0)) < 1e-15);
    PhgSeries s({{0.5, 0, constant_coeff(1)}, {1.0, 0, constant_coeff(-2)}}, 2);
    CHECK(std::abs(eval_series(s, 0.01) - 0.08) < 1e-15);
    CHECK_THROWS_AS(eval_series(s, 0), DomainError);
    CHECK_THROWS_AS(eval_series(s, -1), DomainError);
}

TEST_CASE("monomial_multiply") {
    PhgSeries m = monomial_multiply(PhgSeries({{0.0, 0, constant_coeff(1)}}, 3), 2.0, 0);
    REQUIRE(m.terms().size() == 1);
    CHECK(m.terms()[0].j == cplx(2));
    PhgSeries c = monomial_multiply(PhgSeries({{1.0, 1, constant_coeff(cplx(0, 2))}}, 3), 0.5, 0);
    CHECK(c.terms()[0].j == cplx(1.5));
    CHECK(c.terms()[0].k == 1);
    CHECK(monomial_multiply(PhgSeries({}, 1), 3.0, 0).empty());
    CHECK_THROWS_AS(monomial_multiply(c, 1.0, 1), Unsupported);
    PhgSeries s({{0.5, 1, constant_coeff(2)}, {1.0, 0, constant_coeff(-1)}, {2.0, 2, constant_coeff(0.25)}}, 3);
    for (double x : {0.01, 0.2, 0.7}) {
        cplx a = eval_series(monomial_multiply(s, 1.5, 0), x), b = std::pow(x, 1.5) * eval_series(s, x);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
    }
}

TEST_CASE("truncation error has the order of the first dropped term") {
    // e^{-x} with terms through x^2, truncated at 1: error ~ x^2
    std::vector<PhgTerm> terms = {{0.0, 0, constant_coeff(1)}, {1.0, 0, constant_coeff(-1)},
                                  {2.0, 0, constant_coeff(0.5)}};
    PhgSeries s(terms, 3);
    double x1 = 1e-3, x2 = 1e-2;
    double e1 = std::abs(std::exp(-x1) - eval_series(truncate(s, 1), x1));
    double e2 = std::abs(std::exp(-x2) - eval_series(truncate(s, 1), x2));
    CHECK(std::abs(std::log(e2 / e1) / std::log(x2 / x1) - 2) < 0.1);
}

TEST_CASE("profiles agree with their sigma expansions") {
    for (const char* name : {"gaussian", "example", "bump"}) {
        PhgProfile p = profile_by_name(name);
        const double r = 3;
        for (double gam : {0.0, 2.0, 4.0}) {
            PhgSeries tr = truncate(p.sigma_expansion, gam);
            auto err = [&](double s) { return std::abs(p.evaluate(s, r) - eval_series(tr, s, {r})); };
            double s1 = 1e-2, s2 = 4e-2;
            double slope = std::log(err(s2) / err(s1)) / std::log(s2 / s1);
            // next exponent above gam
            double next = 1e9;
            for (const auto& t : p.sigma_expansion.terms())
                if (t.j.real() > gam + 1e-9) next = std::min(next, t.j.real());
            CHECK_MESSAGE(std::abs(slope - next) < 0.1, name << " gamma " << gam << " slope " << slope);
        }
    }
}

TEST_CASE("r expansion of the example profile at fixed lambda") {
    PhgProfile p = example_profile();
    for (double lambda : {0.5, 2.0}) {
        auto err = [&](double r) {
            return std::abs(p.evaluate(lambda / r, r) - eval_series(truncate(p.r_expansion, 2), 1 / r, {lambda}));
        };
        double slope = std::log(err(100) / err(1000)) / std::log(10.0);
        CHECK(std::abs(slope - 4) < 0.1);
    }
}

TEST_CASE("csv dump") {
    std::ostringstream os;
    write_series_csv(os, PhgSeries({{0.5, 1, constant_coeff(cplx(2, -1))}}, 1), {});
    CHECK(os.str() == "re_j,im_j,k,re_coeff,im_coeff\n0.5,0,1,2,-1\n");
}
