#include <cmath>

#include "doctest.h"
#include "phgosc/errors.hpp"
#include "phgosc/oscquad.hpp"
#include "phgosc/profiles.hpp"

using namespace phgosc;

TEST_CASE("gaussian closed form") {
    const OscIntegrand ig = make_integrand(gaussian_profile(), 1);
    CHECK(std::abs(quad_panels(ig, 0, 0, 1e-13).value - 1.0) < 1e-13);
    for (double t : {0.5, 10.0, 300.0}) {
        const cplx exact = 1.0 / cplx(1, -t);
        CHECK(std::abs(quad_panels(ig, t, 0, 1e-13).value - exact) < 1e-13);
        CHECK(std::abs(quad_contour(ig, t, 0, 1e-13).value - exact) < 1e-12);
    }
    CHECK_THROWS_AS(make_integrand(gaussian_profile(), 0), DomainError);
    CHECK_THROWS_AS(quad_panels(ig, -1, 0, 1e-10), DomainError);
}

TEST_CASE("panels and contour agree") {
    for (const char* name : {"gaussian", "example"})
        for (int sign : {1, -1})
            for (auto [t, r] : {std::pair{30.0, 7.0}, {2.0, 40.0}, {100.0, 200.0}}) {
                const OscIntegrand ig = make_integrand(profile_by_name(name), sign);
                const QuadResult a = quad_panels(ig, t, r, 1e-11), b = quad_contour(ig, t, r, 1e-11);
                CHECK_MESSAGE(std::abs(a.value - b.value) <= 1e-10, name << " " << sign << " " << t << " " << r);
            }
}

TEST_CASE("difference integral") {
    const PhgProfile p = example_profile();
    const OscIntegrand plus = make_integrand(p, 1), minus = make_integrand(p, -1);
    const cplx d = difference_integral(plus, 10, 20, 1e-11).value;
    const cplx c = quad_contour(plus, 10, 20, 1e-11).value - quad_contour(minus, 10, 20, 1e-11).value;
    CHECK(std::abs(d - c) < 1e-8);
    CHECK(std::abs(difference_integral(make_integrand(gaussian_profile(), 1), 4, 0, 1e-12).value) < 1e-12);
    CHECK_THROWS_AS(difference_integral(make_integrand(bump_profile(), 1), 4, 1, 1e-10), DomainError);
}

namespace {
// e^{-sigma^2} / (sigma - p) with p in the first quadrant, between the real
// axis and the descent path for t > 0.
PhgProfile off_axis_pole(cplx p) {
    PhgProfile f;
    f.name = "off-axis";
    f.evaluate = [p](double s, double) { return std::exp(-s * s) / (s - p); };
    f.gaussian_rate = 1;
    f.analytic_rest = [p](cplx s, double) { return 1.0 / (s - p); };
    f.poles = [p](double) { return std::vector<cplx>{p}; };
    f.decay = {Decay::Kind::gaussian, 1, 4, false};
    return f;
}
}  // namespace

TEST_CASE("enclosed poles are picked up as residues") {
    const OscIntegrand ig = make_integrand(off_axis_pole({1.2, 0.1}), 1);
    ContourOptions off;
    off.include_residues = false;
    const cplx panels = quad_panels(ig, 5, 0, 1e-12).value;
    const cplx with = quad_contour(ig, 5, 0, 1e-12).value, without = quad_contour(ig, 5, 0, 1e-12, off).value;
    CHECK(std::abs(with - panels) < 1e-11);
    CHECK(std::abs(with - without) > 1e-3);
}

TEST_CASE("the example profile's poles stay outside the loop") {
    ContourOptions off;
    off.include_residues = false;
    for (int sign : {1, -1}) {
        const OscIntegrand ig = make_integrand(example_profile(), sign);
        CHECK(quad_contour(ig, 5, 10, 1e-11).value == quad_contour(ig, 5, 10, 1e-11, off).value);
    }
}

TEST_CASE("contour preconditions") {
    CHECK_THROWS_AS(quad_contour(make_integrand(bump_profile(), 1), 3, 1, 1e-10), Unsupported);
    CHECK_THROWS_AS(quad_contour(make_integrand(gaussian_profile(), 1), 0, 1, 1e-10), Unsupported);
}

TEST_CASE("truncation bound") {
    const OscIntegrand ig = make_integrand(gaussian_profile(), 1);
    const Truncation tr = truncation_for(ig, 1, 1, 1e-12);
    CHECK(tr.sigma_max > 5);
    CHECK(tr.tail_bound <= 1e-12);
}

TEST_CASE("custom amplitude") {
    // a = 2 sigma e^{-sigma^2} reproduces the gaussian integrand
    const OscIntegrand ig = make_integrand(gaussian_profile(), 1);
    const auto a = [](double s) { return cplx(2 * s * std::exp(-s * s)); };
    CHECK(std::abs(quad_panels_amplitude(ig, a, 3, 2, 1e-12).value - quad_panels(ig, 3, 2, 1e-12).value) < 1e-12);
}
