#pragma once

#include <complex>
#include <functional>
#include <string>

#include "phgosc/errors.hpp"

namespace phgosc {

using cplx = std::complex<double>;

struct QuadResult {
    cplx value{};
    double err_estimate = 0;
    std::string method;
    long evaluations = 0;
};

inline constexpr double kErrFloor = 1e-14;

// Tolerance not met within budget; carries the best available estimate.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, QuadResult best) : Error(what), best_(std::move(best)) {}
    const QuadResult& best() const { return best_; }

private:
    QuadResult best_;
};

struct PanelOptions {
    // Panels never span more than this change in phase.
    double phase_step = 1.5707963267948966;
    // Local amplitude length scale; panels are split until narrower than it.
    std::function<double(double)> max_width;
    // Minimum number of panels on a non-oscillatory interval.
    int min_panels = 8;
    long max_evals = 60'000'000;
};

// int_a^b exp(i (c2 x^2 + c1 x)) g(x) dx by Gauss-Kronrod (7/15) on panels cut
// at phase level sets, refined adaptively. The summation order depends only on
// panel positions, so results are reproducible bit for bit.
QuadResult integrate_quadratic_phase(const std::function<cplx(double)>& g, double c2, double c1,
                                     double a, double b, double tol, const PanelOptions& opt = {});

// Plain adaptive Gauss-Kronrod for smooth integrands on [a, b].
QuadResult integrate_smooth(const std::function<cplx(double)>& g, double a, double b, double tol,
                            const PanelOptions& opt = {});

// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(cplx x);
    cplx value() const { return sum_ + comp_; }

private:
    void add_part(double x, double& s, double& c);
    cplx sum_{};
    cplx comp_{};
};

}  // namespace phgosc
