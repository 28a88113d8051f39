#pragma once

// Independent reference computations used only by tests and the CLI --oracle flag.
// Nothing here calls the library's Gamma, c-coefficients or quadrature.

#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

struct GaussRule {
    std::vector<double> x, w;  // on [-1, 1]
};
const GaussRule& gauss_legendre(int n);

// Composite Gauss-Legendre of f over [a, b] split into `panels` equal parts.
cplx integrate(const std::function<cplx(double)>& f, double a, double b, int panels, int order = 20);

// lim_{eps->0} int_0^inf e^{i xi tau - eps xi} xi^j log^k xi d xi: each regularized
// integral is taken on a ray rotated by pi/4 into the decaying half plane, then
// Richardson-extrapolated over eps in {0.02, 0.01, 0.005}.
cplx monomial_transform(double j, int k, double tau);
cplx regularized_monomial(double j, int k, double tau, double eps);

// int e^{i d^2/tau} d^{2m} dd by eps-regularization on the real line and Richardson.
cplx fresnel_moment(int m, double tau);

// Central-difference n-th derivative with Richardson extrapolation.
double derivative(const std::function<double(double)>& f, double x, int n, double h);

// -i int e^{-2 i l} l / (1 + l^2) dl closed by the residue at l = -i.
cplx caption_integral_residue();
// Large-t limit of t^2 Im(I_+ - I_-) along r = 2t for the example profile, by
// the residue at sigma = i/r of the rescaled integral.
double fig_limit_residue();

}  // namespace oracle
