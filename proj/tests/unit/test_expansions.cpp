#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "phgosc/errors.hpp"
#include "phgosc/expansions.hpp"
#include "phgosc/profiles.hpp"

using namespace phgosc;

namespace {

ExpansionRequest request(const PhgProfile& p, int sign, Face face, double order) {
    ExpansionRequest rq;
    rq.profile = p;
    rq.sign = sign;
    rq.face = face;
    rq.order = order;
    return rq;
}

cplx oracle_value(const PhgProfile& p, int sign, double t, double r) {
    return quad_panels(make_integrand(p, sign), t, r, 1e-12).value;
}

}  // namespace

TEST_CASE("kf leading term for the gaussian") {
    const double r = 2, tau = 100, t = tau * r * r;
    const ExpansionRequest rq = request(gaussian_profile(), 1, Face::kf, 0);
    const cplx lead = kf_expansion(rq, t, r).value;
    CHECK(std::abs(lead - cplx(0, 1) / (r * r * tau)) < 1e-15);
    // next order is tau^{-3/2}, from the e^{i sigma r} factor
    CHECK(std::abs(lead - oracle_value(gaussian_profile(), 1, t, r)) < 2.0 / (r * r * tau * std::sqrt(tau)));
}

TEST_CASE("kf expansion error shrinks with the order") {
    for (const char* name : {"gaussian", "example"})
        for (int sign : {1, -1}) {
            const double r = 1.5, t = 300 * r * r;
            const cplx ref = oracle_value(profile_by_name(name), sign, t, r);
            double prev = INFINITY;
            for (double order : {0.0, 2.0, 4.0}) {
                const double err = std::abs(kf_expansion(request(profile_by_name(name), sign, Face::kf, order), t, r).value - ref);
                CHECK_MESSAGE(err < prev, name << " sign " << sign << " order " << order);
                prev = err;
            }
            CHECK(prev < 1e-5 * std::abs(ref));
        }
}

TEST_CASE("kf out of regime is flagged, empty expansion gives zero") {
    PhgProfile p = gaussian_profile();
    const ExpansionResult low = kf_expansion(request(p, 1, Face::kf, 0), 1, 2);
    CHECK(std::any_of(low.notes.begin(), low.notes.end(),
                      [](const std::string& n) { return n.rfind("out of regime", 0) == 0; }));
    p.sigma_expansion = PhgSeries({}, 4, "sigma");
    CHECK(kf_expansion(request(p, 1, Face::kf, 2), 400, 2).value == cplx(0));
}

TEST_CASE("parF for an r-independent profile") {
    // The r expansion is taken at fixed lambda = sigma r, so exp(-sigma^2)
    // contributes (-lambda^2)^n rho^{2n}; each order gains rho^2.
    ExpansionRequest rq = request(gaussian_profile(), 1, Face::parF, 0);
    rq.tol = 1e-10;
    const double r = 100, t = r * r;
    for (int sign : {1, -1}) {
        rq.sign = sign;
        const cplx ref = oracle_value(gaussian_profile(), sign, t, r);
        double prev = INFINITY;
        for (double order : {0.0, 2.0, 4.0}) {
            rq.order = order;
            const double rel = std::abs(parF_expansion(rq, t, r).value - ref) / std::abs(ref);
            CHECK(rel < prev);
            prev = rel;
        }
        CHECK(prev < 1e-9);
    }
}

TEST_CASE("parF with no terms is zero") {
    PhgProfile p = gaussian_profile();
    p.r_expansion = PhgSeries({}, 4, "rho");
    CHECK(parF_expansion(request(p, 1, Face::parF, 2), 1e4, 100).value == cplx(0));
}

TEST_CASE("parF for the example profile at tau = 1") {
    const PhgProfile p = example_profile();
    const double r = 300, t = r * r;
    const OscIntegrand ig = make_integrand(p, 1);
    const cplx diff = difference_integral(ig, t, r, 1e-12).value;
    const cplx pred = parF_expansion(request(p, 1, Face::parF, 2), t, r).value -
                      parF_expansion(request(p, -1, Face::parF, 2), t, r).value;
    CHECK(std::abs(pred - diff) < 1e-2 * std::abs(diff));
}

TEST_CASE("stationary split") {
    const ExpansionRequest rq = request(gaussian_profile(), -1, Face::dilF, 0);
    const StationarySplit sp = stationary_split(rq, 50, 100);
    CHECK(std::abs(sp.stat.value + sp.non.value - oracle_value(gaussian_profile(), -1, 50, 100)) < 1e-8);
    // window centre r/2t far outside the support
    const StationarySplit far = stationary_split(rq, 1, 60);
    CHECK(std::abs(far.stat.value) < 1e-12);
    CHECK_THROWS_AS(stationary_split(request(gaussian_profile(), 1, Face::dilF, 0), 50, 100), DomainError);
}

TEST_CASE("another admissible window leaves the sum unchanged") {
    ExpansionRequest a = request(example_profile(), -1, Face::dilF, 0), b = a;
    b.cutoffs.psi = [](double x) { return smooth_step((std::abs(x) - 0.1) / 0.3); };
    for (auto [t, r] : {std::pair{20.0, 40.0}, {100.0, 150.0}}) {
        const StationarySplit sa = stationary_split(a, t, r), sb = stationary_split(b, t, r);
        CHECK(sa.stat.value != sb.stat.value);
        CHECK(std::abs(sa.stat.value + sa.non.value - sb.stat.value - sb.non.value) < 1e-9);
    }
}

TEST_CASE("stationary phase along r = t") {
    const ExpansionRequest rq = request(gaussian_profile(), -1, Face::dilF, 0);
    const double t = 2000;
    const cplx stat = stationary_split(rq, t, t).stat.value;
    double prev = INFINITY;
    for (int K = 0; K <= 2; ++K) {
        const double err = std::abs(stationary_phase_dilf(rq, t, 1, K).value - stat);
        CHECK(err < prev);
        prev = err;
    }
    // K = 0 closed form
    const cplx lead = std::sqrt(M_PI) / std::sqrt(cplx(0, -t)) * std::exp(-0.25) * std::exp(cplx(0, -t / 4));
    CHECK(std::abs(stationary_phase_dilf(rq, t, 1, 0).value - lead) < 1e-12 * std::abs(lead));
}

TEST_CASE("thmD assembly") {
    for (const char* name : {"gaussian", "example"})
        for (auto [t, r] : {std::pair{0.5, 3.0}, {5.0, 10.0}, {40.0, 80.0}}) {
            const PhgProfile p = profile_by_name(name);
            const DecompositionResult d = thmD_decompose(request(p, -1, Face::dilF, 0), t, r);
            CHECK(std::abs(d.predicted_total - oracle_value(p, -1, t, r)) < 1e-7);
        }
    const DecompositionResult small = thmD_decompose(request(gaussian_profile(), -1, Face::dilF, 0), 0.5, 3);
    CHECK(small.phase == 0);
}

TEST_CASE("corner expansion of the example mid piece") {
    const PhgProfile p = example_mid_profile();
    const double tau = 2, r = 500;
    const CornerResult c = corner_kf_expansion(p, 1, tau, r, 2);
    const cplx ref = oracle_value(p, 1, tau * r * r, r);
    CHECK(std::abs(c.value - ref) < 1e-3 * std::abs(ref));
    CHECK(std::abs(c.value - c.rescaled / (r * r)) <= 1e-15 * std::abs(c.value));
}

TEST_CASE("corner terms scale as r^{-j}") {
    const PhgProfile p = example_mid_profile();
    const CornerResult a = corner_kf_expansion(p, 1, 2, 400, 2), b = corner_kf_expansion(p, 1, 2, 800, 2);
    REQUIRE(a.terms.size() == b.terms.size());
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].k != 0 || std::abs(a.terms[i].value) < 1e-14) continue;
        const double ratio = std::abs(b.terms[i].value / a.terms[i].value);
        CHECK(ratio == doctest::Approx(std::pow(0.5, a.terms[i].j.real())).epsilon(1e-9));
    }
}

TEST_CASE("fresnel moment scaling") {
    const auto grid = default_jlem_grid();
    for (int k = 0; k <= 2; ++k) CHECK(std::abs(fresnel_moment_scaling_check(k, grid) - (0.5 + k)) < 0.1);
    CHECK_THROWS_AS(fresnel_moment_scaling_check(0, grid, [](double, double) { return 0.0; }), Inconclusive);
    CHECK_THROWS_AS(jlem_integral(0, 0, jlem_fixture()), DomainError);
}

TEST_CASE("profile derivatives") {
    PhgProfile g = gaussian_profile();
    g.derivative = nullptr;  // force the finite-difference route
    const double s = 0.7;
    CHECK(std::abs(profile_derivative(g, s, 1, 1, 0.05) - (-2 * s * std::exp(-s * s))) < 1e-9);
    CHECK(std::abs(profile_derivative(g, s, 1, 2, 0.05) - ((4 * s * s - 2) * std::exp(-s * s))) < 1e-8);
}
