#include "phgosc/profiles.hpp"

#include <cmath>
#include <vector>

#include "phgosc/compactification.hpp"
#include "phgosc/errors.hpp"
#include "phgosc/special_functions.hpp"

namespace phgosc {

namespace {

constexpr int kTerms = 10;  // even powers 0..18 kept in expansions

// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x) {
    double h0 = 1, h1 = 2 * x;
    if (n == 0) return h0;
    for (int m = 1; m < n; ++m) {
        double h2 = 2 * x * h1 - 2 * m * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

// sum_n (-1)^n x^{2n} / n! with coefficients produced by `coeff(n)`.
PhgSeries even_series(const std::function<CoeffFn(int n)>& coeff, const std::string& var) {
    std::vector<PhgTerm> terms;
    for (int n = 0; n < kTerms; ++n) terms.push_back({cplx(2.0 * n), 0, coeff(n)});
    return PhgSeries(std::move(terms), 2.0 * kTerms, var);
}

double sign_pow(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

PhgProfile gaussian_profile() {
    PhgProfile p;
    p.name = "gaussian";
    p.evaluate = [](double s, double) { return cplx(std::exp(-s * s)); };
    auto constant = [](int n) { return constant_coeff(sign_pow(n) / factorial(n)); };
    p.sigma_expansion = even_series(constant, "sigma");
    p.corner_expansion = even_series(constant, "sigma");
    p.r_expansion = even_series(
        [](int n) {
            return CoeffFn([n](const ParamPoint& q) {
                return cplx(sign_pow(n) * std::pow(q.value, 2 * n) / factorial(n));
            });
        },
        "rho");
    p.decay = {Decay::Kind::gaussian, 1.0, 1.0};
    p.even_in_sigma = true;
    p.derivative = [](double s, double, int n) { return cplx(sign_pow(n) * hermite(n, s) * std::exp(-s * s)); };
    p.gaussian_rate = 1;
    p.analytic_rest = [](cplx, double) { return cplx(1.0); };
    p.poles = [](double) { return std::vector<cplx>{}; };
    p.length_scale = [](double, double) { return 0.25; };
    return p;
}

PhgProfile example_profile() {
    PhgProfile p;
    p.name = "example";
    p.evaluate = [](double s, double r) { return cplx(std::exp(-s * s) / (2 * (1 + s * s * r * r))); };
    // sigma^{2N}: (1/2)(-1)^N sum_{m<=N} r^{2m}/(N-m)!
    p.sigma_expansion = even_series(
        [](int n) {
            return CoeffFn([n](const ParamPoint& q) {
                double s = 0;
                for (int m = 0; m <= n; ++m) s += std::pow(q.value, 2 * m) / factorial(n - m);
                return cplx(0.5 * sign_pow(n) * s);
            });
        },
        "sigma");
    auto lambda_coeff = [](int n, bool with_power) {
        return CoeffFn([n, with_power](const ParamPoint& q) {
            double l = q.value;
            double pw = with_power ? std::pow(l, 2 * n) : 1.0;
            return cplx(sign_pow(n) * pw / (factorial(n) * 2 * (1 + l * l)));
        });
    };
    p.r_expansion = even_series([&](int n) { return lambda_coeff(n, true); }, "rho");
    p.corner_expansion = even_series([&](int n) { return lambda_coeff(n, false); }, "sigma");
    p.decay = {Decay::Kind::gaussian, 1.0, 0.5};
    p.even_in_sigma = true;
    p.gaussian_rate = 1;
    p.analytic_rest = [](cplx s, double r) { return 1.0 / (2.0 * (1.0 + s * s * r * r)); };
    p.poles = [](double r) { return std::vector<cplx>{cplx(0, 1 / r), cplx(0, -1 / r)}; };
    p.length_scale = [](double s, double r) { return std::min(0.25, 0.5 * (s + 1 / r)); };
    return p;
}

PhgProfile lambda_gaussian_profile() {
    PhgProfile p;
    p.name = "lambda-gaussian";
    p.evaluate = [](double s, double r) { return cplx(std::exp(-s * s * r * r)); };
    p.sigma_expansion = even_series(
        [](int n) {
            return CoeffFn([n](const ParamPoint& q) {
                return cplx(sign_pow(n) * std::pow(q.value, 2 * n) / factorial(n));
            });
        },
        "sigma");
    p.r_expansion = PhgSeries(
        {PhgTerm{0.0, 0, [](const ParamPoint& q) { return cplx(std::exp(-q.value * q.value)); }}},
        INFINITY, "rho");
    p.decay = {Decay::Kind::gaussian, 1.0, 1.0, true};
    p.even_in_sigma = true;
    p.length_scale = [](double, double r) { return 0.25 / r; };
    return p;
}

PhgProfile bump_profile() {
    PhgProfile p;
    p.name = "bump";
    p.evaluate = [](double s, double) { return cplx(std::exp(-s) * smooth_step((s - 1) / 2)); };
    std::vector<PhgTerm> terms;
    for (int n = 0; n < 2 * kTerms; ++n)
        terms.push_back({cplx(n), 0, constant_coeff(sign_pow(n) / factorial(n))});
    p.sigma_expansion = PhgSeries(terms, 2.0 * kTerms, "sigma");
    p.corner_expansion = PhgSeries(terms, 2.0 * kTerms, "sigma");
    std::vector<PhgTerm> rterms;
    for (int n = 0; n < 2 * kTerms; ++n)
        rterms.push_back({cplx(n), 0, [n](const ParamPoint& q) {
                              return cplx(std::pow(-q.value, n) / factorial(n));
                          }});
    p.r_expansion = PhgSeries(rterms, 2.0 * kTerms, "rho");
    p.support_hint = std::make_pair(0.0, 3.0);
    p.decay = {Decay::Kind::compact, 3.0, 1.0};
    p.length_scale = [](double, double) { return 0.125; };
    return p;
}

PhgProfile example_mid_profile() {
    PhgProfile p;
    p.name = "example-mid";
    p.evaluate = [](double s, double r) {
        return partition_weights(s, r).mid * std::exp(-s * s) / (2 * (1 + s * s * r * r));
    };
    // For sigma < sigma0/2 the mid weight is 1 - step(lambda), so the corner
    // expansion coefficients carry that factor.
    auto lam_coeff = [](int n) {
        return CoeffFn([n](const ParamPoint& q) {
            double l = q.value;
            double cut = 1 - smooth_step((l - 2.0) / 2.0);
            return cplx(cut * sign_pow(n) / (factorial(n) * 2 * (1 + l * l)));
        });
    };
    p.corner_expansion = even_series(lam_coeff, "sigma");
    p.support_hint = std::make_pair(0.0, 2.0);
    p.decay = {Decay::Kind::compact, 2.0, 0.5};
    p.even_in_sigma = false;
    p.length_scale = [](double s, double r) { return std::min(0.125, 0.5 * (s + 1 / r)); };
    return p;
}

PhgProfile high_energy_profile(const PhgProfile& base) {
    PhgProfile p;
    p.name = base.name + "-high";
    p.evaluate = [f = base.evaluate](double s, double r) {
        double w = partition_weights(s, r).high;
        return w == 0.0 ? cplx(0.0) : w * f(s, r);
    };
    p.sigma_expansion = PhgSeries({}, 2.0 * kTerms, "sigma");
    p.corner_expansion = PhgSeries({}, 2.0 * kTerms, "sigma");
    p.decay = base.decay;
    p.length_scale = [ls = base.length_scale](double s, double r) {
        return ls ? std::min(0.125, ls(s, r)) : 0.125;
    };
    return p;
}

PhgProfile profile_by_name(const std::string& name) {
    if (name == "gaussian") return gaussian_profile();
    if (name == "gaussian-high") return high_energy_profile(gaussian_profile());
    if (name == "example") return example_profile();
    if (name == "lambda-gaussian") return lambda_gaussian_profile();
    if (name == "bump") return bump_profile();
    if (name == "example-mid") return example_mid_profile();
    throw DomainError("unknown profile '" + name + "'");
}

}  // namespace phgosc
