#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "phgosc/phg_series.hpp"
#include "phgosc/quadrature.hpp"

namespace phgosc {

struct OscIntegrand {
    PhgProfile profile;
    int sign = 1;
    bool analytic_in_sector = false;
    std::function<std::vector<cplx>(double r)> pole_list;
    Decay decay;
};

OscIntegrand make_integrand(const PhgProfile& profile, int sign);

// Integrand on the real axis; this is what the panel oracle integrates against
// exp(i(sigma^2 t + sign sigma r)).
using Amplitude = std::function<cplx(double sigma)>;

// I_sign[phi](t, r) = 2 int_0^inf e^{i sigma^2 t + i sign sigma r} phi(sigma, r) sigma d sigma
QuadResult quad_panels(const OscIntegrand& ig, double t, double r, double tol);

// Same integral with a caller-supplied amplitude a(sigma) replacing 2 sigma phi(sigma, r);
// decay and panel sizing are taken from ig.
QuadResult quad_panels_amplitude(const OscIntegrand& ig, const Amplitude& a, double t, double r, double tol);

struct ContourOptions {
    bool include_residues = true;
};

QuadResult quad_contour(const OscIntegrand& ig, double t, double r, double tol, const ContourOptions& opt = {});

// I_+ - I_- for even phi as one full-line integral.
QuadResult difference_integral(const OscIntegrand& ig, double t, double r, double tol);

// Upper end of the sigma range used by the panel oracle, with the tail bound beyond it.
struct Truncation {
    double sigma_max;
    double tail_bound;
};
Truncation truncation_for(const OscIntegrand& ig, double t, double r, double tol);

}  // namespace phgosc
