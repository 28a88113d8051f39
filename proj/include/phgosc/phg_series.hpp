#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace phgosc {

using cplx = std::complex<double>;

// Point at which coefficient functions are evaluated. `value` is the remaining
// continuous variable (r, or lambda = sigma r); `theta` indexes a finite set of
// angular fixtures.
struct ParamPoint {
    double value = 0;
    int theta = 0;
};

// Must be safe to call concurrently.
using CoeffFn = std::function<cplx(const ParamPoint&)>;

CoeffFn constant_coeff(cplx c);

struct PhgTerm {
    cplx j;
    int k = 0;
    CoeffFn coeff;
};

class PhgSeries {
public:
    PhgSeries() = default;
    PhgSeries(std::vector<PhgTerm> terms, double remainder_order, std::string variable = "x");

    const std::vector<PhgTerm>& terms() const { return terms_; }
    double remainder_order() const { return remainder_; }
    const std::string& variable() const { return variable_; }
    bool empty() const { return terms_.empty(); }

    // Coefficient of x^j log^k x, zero if absent.
    cplx coefficient(cplx j, int k, const ParamPoint& p) const;
    int max_log_power(cplx j) const;

private:
    std::vector<PhgTerm> terms_;
    double remainder_ = std::numeric_limits<double>::infinity();
    std::string variable_ = "x";
};

PhgSeries truncate(const PhgSeries& s, double gamma);
cplx eval_series(const PhgSeries& s, double x, const ParamPoint& p = {});
PhgSeries monomial_multiply(const PhgSeries& s, cplx j0, int k0);

// Columns re_j, im_j, k, re_coeff, im_coeff.
void write_series_csv(std::ostream& os, const PhgSeries& s, const ParamPoint& p);

// Decay of a profile as sigma -> infinity.
struct Decay {
    enum class Kind { gaussian, schwartz, compact };
    Kind kind = Kind::gaussian;
    // gaussian: |phi| <= bound * exp(-(sigma/scale)^2); schwartz: initial length;
    // compact: support end.
    double scale = 1;
    double bound = 1;
    // Scale is divided by r (profiles of lambda = sigma r).
    bool scale_per_r = false;

    double scale_at(double r) const { return scale_per_r ? scale / r : scale; }
};

struct PhgProfile {
    std::string name;
    std::function<cplx(double sigma, double r)> evaluate;
    // sigma -> 0 at fixed r; coefficients are functions of r.
    PhgSeries sigma_expansion;
    // rho = 1/r -> 0 at fixed lambda = sigma r; coefficients are functions of lambda.
    PhgSeries r_expansion;
    // sigma -> 0 at fixed lambda = sigma r; coefficients are functions of lambda.
    PhgSeries corner_expansion;
    std::optional<std::pair<double, double>> support_hint;
    Decay decay;
    bool even_in_sigma = false;
    // Optional exact sigma-derivatives d^n phi / d sigma^n.
    std::function<cplx(double sigma, double r, int n)> derivative;
    // Optional holomorphic data: phi(s, r) = exp(-gaussian_rate s^2) * analytic_rest(s, r).
    double gaussian_rate = 0;
    std::function<cplx(cplx s, double r)> analytic_rest;
    std::function<std::vector<cplx>(double r)> poles;
    // Local length scale of phi in sigma, used to size quadrature panels.
    std::function<double(double sigma, double r)> length_scale;
};

}  // namespace phgosc
