#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "phgosc/compactification.hpp"
#include "phgosc/oscquad.hpp"
#include "phgosc/phg_series.hpp"

namespace phgosc {

struct CutoffParams {
    std::function<double(double)> psi = window_psi;      // stationary window
    std::function<double(double)> chi = time_cutoff_chi;  // time cutoff
};

struct ExpansionRequest {
    PhgProfile profile;
    int sign = 1;
    Face face = Face::kf;
    double order = 0;  // keep terms with Re j <= order
    CutoffParams cutoffs;
    double tol = 1e-11;  // for the numeric pieces
};

struct ExpansionResult {
    cplx value{};
    double err_estimate = 0;  // numeric part only; truncation error is not included
    std::vector<std::string> notes;
};

// tau = t / r^2 -> infinity at fixed r.
ExpansionResult kf_expansion(const ExpansionRequest& req, double t, double r);

// r -> infinity at fixed tau, from the profile's r_expansion.
ExpansionResult parF_expansion(const ExpansionRequest& req, double t, double r);

// Stationary phase for I_- along r = rhat t, terms j = 0..K.
ExpansionResult stationary_phase_dilf(const ExpansionRequest& req, double t, double rhat, int K);

struct StationarySplit {
    QuadResult stat;
    QuadResult non;
};
StationarySplit stationary_split(const ExpansionRequest& req, double t, double r);

struct DecompositionResult {
    cplx osc_value{};
    cplx phg_value{};
    double phase = 0;
    cplx predicted_total{};
    double err_estimate = 0;
};
DecompositionResult thmD_decompose(const ExpansionRequest& req, double t, double r);

struct CornerTerm {
    cplx j;
    int k = 0;
    cplx value;  // contribution to the rescaled integral I / rho^2
};
struct CornerResult {
    cplx rescaled{};  // I / rho^2
    cplx value{};     // I
    double err_estimate = 0;
    std::vector<CornerTerm> terms;
};
// Expansion at fixed tau as r -> infinity for a profile supported near the
// corner, from its corner_expansion (sigma -> 0 at fixed lambda).
CornerResult corner_kf_expansion(const PhgProfile& profile, int sign, double tau, double r, double order,
                                 double tol = 1e-10);

// int_lower^inf e^{i(tau l^2 + sign l)} g(l) dl for g of at most polynomial growth;
// the tail beyond a cutoff is summed by repeated integration by parts.
QuadResult lambda_oscillatory_integral(const std::function<cplx(double)>& g, double tau, int sign, double lower,
                                       double tol);

// Fixture for the moment scaling check: phi(sigma, lambda) with s fixed to 1.
using JlemProfile = std::function<double(double sigma, double lambda)>;
JlemProfile jlem_fixture();
cplx jlem_integral(int k, double tau, const JlemProfile& phi);
// Fitted log-log slope of |J_k| as tau -> 0 over the grid.
double fresnel_moment_scaling_check(int k, const std::vector<double>& tau_grid, const JlemProfile& phi = jlem_fixture());
std::vector<double> default_jlem_grid();

// sigma-derivative d^n phi / d sigma^n at fixed r: exact callback if the profile
// has one, otherwise Richardson-extrapolated central differences with step h.
cplx profile_derivative(const PhgProfile& p, double sigma, double r, int n, double h);

}  // namespace phgosc
