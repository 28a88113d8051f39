#pragma once

#include <complex>
#include <functional>

#include "phgosc/phg_series.hpp"
#include "phgosc/quadrature.hpp"

namespace phgosc {

struct HalflineTransformRequest {
    cplx j;
    int k = 0;
    double tau = 1;
};

// F(Theta(xi) xi^j log^k xi)(tau) = |tau|^{-j-1} sum_kappa c_{j,k,kappa;sgn tau} log^kappa |tau|.
cplx monomial_transform(const HalflineTransformRequest& req);

// Large-|tau| expansion of the Fourier transform of a compactly supported function
// with the given xi -> 0 expansion. Term (j+1, k) carries the coefficient of
// |tau|^{-j-1} log^k |tau|; evaluate with eval_fourier_expansion.
PhgSeries phg_fourier_expansion(const PhgSeries& input, double re_max, int sign_tau);

cplx eval_fourier_expansion(const PhgSeries& s, double tau, const ParamPoint& p = {});

// int_0^support e^{i xi tau} f(xi) d xi with panels no wider than pi/(4|tau|).
QuadResult numeric_halfline_fourier(const std::function<cplx(double)>& f, double support_end, double tau,
                                    double tol, const PanelOptions& opt = {});

}  // namespace phgosc
