#include "phgosc/compactification.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "phgosc/errors.hpp"

namespace phgosc {

std::string to_string(Face f) {
    switch (f) {
        case Face::kf: return "kf";
        case Face::parF: return "parF";
        case Face::dilF: return "dilF";
        case Face::nf: return "nf";
        case Face::Sigma: return "Sigma";
        case Face::interior: return "interior";
    }
    return "interior";
}

Face parse_face(const std::string& s) {
    for (Face f : {Face::kf, Face::parF, Face::dilF, Face::nf, Face::Sigma, Face::interior})
        if (to_string(f) == s) return f;
    throw DomainError("unknown face '" + s + "'");
}

ChartPoint chart(double t, double r) {
    if (!(r >= 1)) throw DomainError("chart needs r >= 1");
    if (!(t >= 0)) throw DomainError("chart needs t >= 0");
    ChartPoint p;
    p.t = t;
    p.r = r;
    p.rho = 1 / r;
    p.tau = t / (r * r);
    p.s = t / r;
    // nf: (1+t)/(r+1+t) ~ rho<t> near nf, order one elsewhere.
    p.bdf_nf = (1 + t) / (r + 1 + t);
    p.bdf_sigma = t / (1 + t);
    if (t > 0) {
        // parF = rho + 1/(t rho) = (tau + 1)/(t rho); written to avoid overflow.
        p.bdf_parF = p.rho + r / t;
        p.bdf_dilF = p.rho / p.bdf_parF;
        p.bdf_kf = 1 / (t * p.rho * p.bdf_parF);
    } else {
        p.bdf_parF = INFINITY;
        p.bdf_dilF = 0;
        p.bdf_kf = INFINITY;
    }
    return p;
}

Face classify(const ChartPoint& p, double threshold) {
    if (!(threshold > 0 && threshold < 1)) throw DomainError("threshold must lie in (0, 1)");
    const std::array<std::pair<Face, double>, 5> faces = {{{Face::kf, p.bdf_kf},
                                                           {Face::parF, p.bdf_parF},
                                                           {Face::dilF, p.bdf_dilF},
                                                           {Face::nf, p.bdf_nf},
                                                           {Face::Sigma, p.bdf_sigma}}};
    Face best = Face::interior;
    double best_v = threshold;
    for (const auto& [f, v] : faces) {
        if (v < best_v) {
            best = f;
            best_v = v;
        }
    }
    return best;
}

double bump(double x) {
    if (std::abs(x) >= 1) return 0;
    return std::exp(1 - 1 / (1 - x * x));
}

double smooth_step(double u) {
    if (u <= 0) return 1;
    if (u >= 1) return 0;
    double a = bump(u), b = bump(1 - u);
    return a / (a + b);
}

Weights partition_weights(double sigma, double r, const PartitionParams& p) {
    if (!(sigma >= 0)) throw DomainError("sigma must be nonnegative");
    if (!(p.sigma0 > 0 && p.sigma1 > p.sigma0 && p.lambda0 > 0))
        throw DomainError("need 0 < sigma0 < sigma1 and lambda0 > 0");
    Weights w;
    const double h0 = 0.5 * p.sigma0, l0 = 0.5 * p.lambda0;
    w.low = smooth_step((sigma - h0) / h0) * smooth_step((sigma * r - l0) / l0);
    w.high = 1 - smooth_step((sigma - p.sigma1) / p.sigma1);
    w.mid = 1 - w.low - w.high;
    return w;
}

double window_psi(double x) { return smooth_step((std::abs(x) - 0.25) / 0.25); }

double time_cutoff_chi(double t) { return smooth_step(t - 1); }

}  // namespace phgosc
