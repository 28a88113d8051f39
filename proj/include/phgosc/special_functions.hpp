#pragma once

#include <complex>

namespace phgosc {

using cplx = std::complex<double>;

inline constexpr int kMaxGammaDerivative = 8;

// Single place where powers of complex bases are defined. Everything uses the
// principal logarithm; (+-i)^z is exp(+-i pi z / 2).
struct BranchPolicy {
    static cplx log(cplx z);
    static cplx pow(cplx base, cplx e);
    static cplx pow_pm_i(int sign, cplx z);
};

cplx gamma(cplx z);
cplx log_gamma(cplx z);  // principal-branch-free: exp(log_gamma(z)) == gamma(z)

// n-th derivative of digamma; n = 0 is psi itself.
cplx polygamma(int n, cplx z);

// d^n Gamma / dz^n for n <= kMaxGammaDerivative.
cplx gamma_derivative(cplx z, int n);

struct CCoeffKey {
    cplx j;
    int k = 0;
    int kappa = 0;
    int sign = 1;  // sign of tau
};

// c_{j,k,kappa;sign}: coefficient of |tau|^{-j-1} log^kappa |tau| in the Fourier
// transform of Theta(xi) xi^j log^k xi.
cplx c_coeff(const CCoeffKey& key);

// Full-line moment int e^{i d^2 / tau} d^p dd; zero for odd p.
cplx fresnel_power_moment(int p, double tau);
// The even case d^{2m}.
cplx fresnel_moment(int m, double tau);

double binomial(int n, int k);
double factorial(int n);

}  // namespace phgosc
