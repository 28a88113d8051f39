#include "phgosc/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "phgosc/errors.hpp"

namespace phgosc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// Lanczos g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6,          -1.0 / 30,          1.0 / 42,           -1.0 / 30,
    5.0 / 66,         -691.0 / 2730,      7.0 / 6,            -3617.0 / 510,
    43867.0 / 798,    -174611.0 / 330,    854513.0 / 138,     -236364091.0 / 2730};

void check_pole(cplx z) {
    if (std::abs(z.imag()) < 1e-300 && z.real() <= 0 && z.real() == std::round(z.real()))
        throw PoleError("Gamma has a pole at z = " + std::to_string(z.real()));
}

// log Gamma for Re z >= 0.5.
cplx log_gamma_right(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    cplx t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx BranchPolicy::log(cplx z) { return std::log(z); }

cplx BranchPolicy::pow(cplx base, cplx e) {
    if (base == cplx(0.0)) {
        if (e.real() > 0) return 0.0;
        throw DomainError("0 raised to a power with nonpositive real part");
    }
    return std::exp(e * BranchPolicy::log(base));
}

cplx BranchPolicy::pow_pm_i(int sign, cplx z) { return std::exp(double(sign) * kI * (kPi / 2) * z); }

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    double b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

cplx log_gamma(cplx z) {
    check_pole(z);
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Reflection; the branch of the log is irrelevant once exponentiated.
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z) {
    check_pole(z);
    if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
    return kPi / (std::sin(kPi * z) * std::exp(log_gamma_right(1.0 - z)));
}

cplx polygamma(int n, cplx z) {
    if (n < 0) throw DomainError("polygamma order must be nonnegative");
    check_pole(z);
    // psi^(n)(z) = psi^(n)(z+1) - (-1)^n n! z^{-n-1}
    const double nfact = factorial(n);
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    cplx acc = 0.0;
    while (z.real() < 20.0) {
        acc -= sgn * nfact * std::pow(z, -double(n + 1));
        z += 1.0;
    }
    cplx w = 1.0 / z;
    cplx w2 = w * w;
    if (n == 0) {
        cplx s = std::log(z) - 0.5 * w;
        cplx p = w2;
        for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
            s -= kBernoulli[k - 1] / (2.0 * k) * p;
            p *= w2;
        }
        return acc + s;
    }
    // (-1)^{n+1} [ (n-1)!/z^n + n!/(2 z^{n+1}) + sum B_2k (2k+n-1)!/((2k)! z^{2k+n}) ]
    cplx wn = std::pow(w, double(n));
    cplx s = factorial(n - 1) * wn + 0.5 * nfact * wn * w;
    cplx p = wn * w2;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
        double ratio = 1;  // (2k+n-1)!/(2k)!
        for (int m = int(2 * k) + 1; m <= int(2 * k) + n - 1; ++m) ratio *= m;
        s += kBernoulli[k - 1] * ratio * p;
        p *= w2;
    }
    return acc - sgn * s;
}

cplx gamma_derivative(cplx z, int n) {
    if (n < 0 || n > kMaxGammaDerivative)
        throw DomainError("gamma_derivative supports 0 <= n <= 8");
    cplx g = gamma(z);
    if (n == 0) return g;
    // Complete Bell polynomials: Y_{m+1} = sum_i C(m,i) Y_{m-i} psi^(i).
    std::array<cplx, kMaxGammaDerivative + 1> psi{};
    for (int i = 0; i < n; ++i) psi[i] = polygamma(i, z);
    std::array<cplx, kMaxGammaDerivative + 1> y{};
    y[0] = 1.0;
    for (int m = 0; m < n; ++m) {
        cplx s = 0.0;
        for (int i = 0; i <= m; ++i) s += binomial(m, i) * y[m - i] * psi[i];
        y[m + 1] = s;
    }
    return g * y[n];
}

cplx c_coeff(const CCoeffKey& key) {
    if (!(key.j.real() > -1.0)) throw DomainError("c_coeff needs Re j > -1");
    if (key.k < 0 || key.kappa < 0 || key.kappa > key.k)
        throw DomainError("c_coeff needs 0 <= kappa <= k");
    if (key.k > kMaxGammaDerivative) throw DomainError("c_coeff supports k <= 8");
    if (key.sign != 1 && key.sign != -1) throw DomainError("sign must be +1 or -1");
    const int m = key.k - key.kappa;
    const cplx half_pi_i = double(key.sign) * kI * (kPi / 2);
    cplx sum = 0.0;
    for (int q = 0; q <= m; ++q)
        sum += std::pow(half_pi_i, m - q) * binomial(m, q) * gamma_derivative(key.j + 1.0, q);
    double sgn = (key.kappa % 2 == 0) ? 1.0 : -1.0;
    return BranchPolicy::pow_pm_i(key.sign, key.j + 1.0) * sgn * binomial(key.k, key.kappa) * sum;
}

cplx fresnel_power_moment(int p, double tau) {
    if (!(tau > 0)) throw DomainError("fresnel moment needs tau > 0");
    if (p < 0) throw DomainError("moment power must be nonnegative");
    if (p % 2 == 1) return 0.0;
    double a = p / 2 + 0.5;
    return gamma(a).real() * std::pow(tau, a) * std::exp(kI * (kPi / 2) * a);
}

cplx fresnel_moment(int m, double tau) { return fresnel_power_moment(2 * m, tau); }

}  // namespace phgosc
