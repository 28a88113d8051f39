#include "phgosc/oscquad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "phgosc/errors.hpp"

namespace phgosc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
constexpr double kPoleClearance = 1e-6;
constexpr double kEps = std::numeric_limits<double>::epsilon();

PanelOptions panel_options(const OscIntegrand& ig, double r) {
    PanelOptions o;
    if (ig.profile.length_scale) {
        auto ls = ig.profile.length_scale;
        o.max_width = [ls, r](double s) { return ls(std::abs(s), r); };
    }
    return o;
}

QuadResult schwartz_doubling(const std::function<QuadResult(double, double, double)>& piece, double start,
                             double tol) {
    QuadResult acc = piece(0.0, start, tol / 2);
    double a = start;
    for (int it = 0; it < 40; ++it) {
        QuadResult chunk = piece(a, 2 * a, tol / 4);
        acc.value += chunk.value;
        acc.err_estimate += chunk.err_estimate;
        acc.evaluations += chunk.evaluations;
        a *= 2;
        if (std::abs(chunk.value) + chunk.err_estimate < tol / 10) {
            acc.err_estimate += std::abs(chunk.value);
            return acc;
        }
    }
    throw AccuracyError("tail of Schwartz integrand did not settle", acc);
}

}  // namespace

OscIntegrand make_integrand(const PhgProfile& profile, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    OscIntegrand ig;
    ig.profile = profile;
    ig.sign = sign;
    ig.analytic_in_sector = static_cast<bool>(profile.analytic_rest);
    ig.pole_list = profile.poles;
    ig.decay = profile.decay;
    return ig;
}

Truncation truncation_for(const OscIntegrand& ig, double t, double r, double tol) {
    const Decay& d = ig.decay;
    if (d.kind == Decay::Kind::compact) return {d.scale, 0.0};
    if (d.kind == Decay::Kind::schwartz) return {INFINITY, 0.0};
    const double w = d.scale_at(r);
    double stat = (ig.sign < 0 && t > 0) ? r / (2 * t) : 0.0;
    double want = t > 0 ? std::max(8 * w, stat + 12 / std::sqrt(t)) : 8 * w;
    // No point going where the Gaussian bound is far below tolerance.
    double enough = w * std::sqrt(std::max(1.0, std::log(std::max(1.0, d.bound * w * w / (1e-3 * tol)))));
    double smax = std::min(want, std::max(8 * w, enough));
    return {smax, d.bound * w * w * std::exp(-(smax / w) * (smax / w))};
}

QuadResult quad_panels_amplitude(const OscIntegrand& ig, const Amplitude& a, double t, double r, double tol) {
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    if (!(t >= 0) || !(r >= 0)) throw DomainError("need t >= 0 and r >= 0");
    const PanelOptions o = panel_options(ig, r);
    const double c1 = ig.sign * r;
    auto piece = [&](double lo, double hi, double tl) { return integrate_quadratic_phase(a, t, c1, lo, hi, tl, o); };
    QuadResult res;
    if (ig.decay.kind == Decay::Kind::schwartz) {
        res = schwartz_doubling(piece, ig.decay.scale_at(r), tol);
    } else {
        Truncation tr = truncation_for(ig, t, r, tol);
        res = piece(0.0, tr.sigma_max, std::max(tol - tr.tail_bound, tol / 2));
        res.err_estimate += tr.tail_bound;
    }
    res.method = "panels";
    res.err_estimate = std::max(res.err_estimate, kErrFloor);
    return res;
}

QuadResult quad_panels(const OscIntegrand& ig, double t, double r, double tol) {
    const auto& phi = ig.profile.evaluate;
    return quad_panels_amplitude(ig, [&phi, r](double s) { return 2.0 * s * phi(s, r); }, t, r, tol);
}

QuadResult difference_integral(const OscIntegrand& ig, double t, double r, double tol) {
    if (!ig.profile.even_in_sigma) throw DomainError("difference_integral needs an even profile");
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    OscIntegrand plus = ig;
    plus.sign = 1;
    const auto& phi = ig.profile.evaluate;
    auto a = [&phi, r](double s) { return 2.0 * s * phi(std::abs(s), r); };
    const PanelOptions o = panel_options(ig, r);
    QuadResult res;
    if (ig.decay.kind == Decay::Kind::schwartz) {
        auto piece = [&](double lo, double hi, double tl) {
            QuadResult x = integrate_quadratic_phase(a, t, r, lo, hi, tl / 2, o);
            QuadResult y = integrate_quadratic_phase(a, t, r, -hi, -lo, tl / 2, o);
            x.value += y.value;
            x.err_estimate += y.err_estimate;
            x.evaluations += y.evaluations;
            return x;
        };
        res = schwartz_doubling(piece, ig.decay.scale_at(r), tol);
    } else {
        // Both half-lines need the larger of the two truncations.
        OscIntegrand minus = ig;
        minus.sign = -1;
        Truncation tp = truncation_for(plus, t, r, tol), tm = truncation_for(minus, t, r, tol);
        double smax = std::max(tp.sigma_max, tm.sigma_max);
        double tail = std::max(tp.tail_bound, tm.tail_bound);
        res = integrate_quadratic_phase(a, t, r, -smax, smax, std::max(tol - 2 * tail, tol / 2), o);
        res.err_estimate += 2 * tail;
    }
    res.method = "difference-panels";
    res.err_estimate = std::max(res.err_estimate, kErrFloor);
    return res;
}

namespace {

struct Polyline {
    std::vector<cplx> pts;
};

double distance_to_polyline(const Polyline& pl, cplx p) {
    double best = INFINITY;
    for (std::size_t i = 1; i < pl.pts.size(); ++i) {
        cplx a = pl.pts[i - 1], b = pl.pts[i];
        cplx ab = b - a;
        double len2 = std::norm(ab);
        double u = len2 > 0 ? std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, std::abs(p - (a + u * ab)));
    }
    return best;
}

// Winding number of a closed polyline around p.
int winding(const Polyline& loop, cplx p) {
    double total = 0;
    for (std::size_t i = 1; i < loop.pts.size(); ++i) total += std::arg((loop.pts[i] - p) / (loop.pts[i - 1] - p));
    total += std::arg((loop.pts.front() - p) / (loop.pts.back() - p));
    return static_cast<int>(std::lround(total / (2 * kPi)));
}

}  // namespace

QuadResult quad_contour(const OscIntegrand& ig, double t, double r, double tol, const ContourOptions& opt) {
    if (!ig.analytic_in_sector || !ig.profile.analytic_rest)
        throw Unsupported("contour oracle needs an analytic integrand");
    if (!(t > 0)) throw Unsupported("contour oracle needs t > 0");
    if (!(r >= 0)) throw DomainError("need r >= 0");
    const auto& rest = ig.profile.analytic_rest;
    const double a = ig.profile.gaussian_rate;
    // Exponent Q(s) = c2 s^2 + c1 s including the Gaussian factor of phi.
    const cplx c2(-a, t), c1(0.0, ig.sign * r);
    const cplx d0 = std::sqrt(-1.0 / c2);  // direction of the valley containing +infinity

    std::vector<cplx> poles = ig.pole_list ? ig.pole_list(r) : std::vector<cplx>{};
    for (auto p : poles)
        if (std::abs(p.imag()) < kPoleClearance && p.real() >= -kPoleClearance)
            throw IllConditioned("pole on the real integration axis");

    // P1: steepest descent from the real point s0, Q(s(v)) = Q(s0) - v. With
    // D0 = Q'(s0) and q = sqrt(1 - 4 c2 v / D0^2), s = s0 - 2v / (D0 (1 + q)).
    double s0 = 0;
    cplx D0, Q0;
    auto set_start = [&](double x) {
        s0 = x;
        D0 = 2.0 * c2 * x + c1;
        Q0 = (c2 * x + c1) * x;
    };
    const bool from_zero_r0 = r == 0;
    auto p1_sigma = [&](double v) -> cplx {
        if (from_zero_r0 && s0 == 0) return std::sqrt(-v / c2);
        cplx q = std::sqrt(1.0 - 4.0 * c2 * v / (D0 * D0));
        return s0 - 2.0 * v / (D0 * (1.0 + q));
    };
    // s * ds/dv, finite at v = 0 even when r = 0.
    auto p1_s_ds = [&](double v) -> cplx {
        if (from_zero_r0 && s0 == 0) return -1.0 / (2.0 * c2);
        cplx q = std::sqrt(1.0 - 4.0 * c2 * v / (D0 * D0));
        return p1_sigma(v) * (-1.0 / (D0 * q));
    };
    auto f1 = [&](double v) { return 2.0 * rest(p1_sigma(v), r) * p1_s_ds(v) * std::exp(Q0 - v); };

    const double vbig = 1e4 * (1.0 + std::norm(c1) / std::abs(c2));
    const cplx sad = -c1 / (2.0 * c2);
    const cplx qsad = -c1 * c1 / (4.0 * c2);
    auto p2_sigma = [&](double u) { return sad + u * d0; };
    auto f2 = [&](double u) {
        cplx s = p2_sigma(u);
        return 2.0 * s * rest(s, r) * std::exp(qsad - u * u) * d0;
    };

    // Sampled geometry for clearance and winding checks.
    double far = 1.0;
    for (auto p : poles) far = std::max(far, std::abs(p));
    far = std::max(far, std::abs(sad));
    const double vmax = 60.0, umax = 8.0;
    Polyline path1, path2;
    bool needs_saddle = false;
    auto build = [&] {
        needs_saddle = (p1_sigma(vbig) * std::conj(d0)).real() < 0;
        const int n = 6000;
        path1.pts.clear();
        path2.pts.clear();
        for (int i = 0; i <= n; ++i) {
            double x = double(i) / n;
            path1.pts.push_back(p1_sigma(vbig * x * x * x * x));
        }
        if (needs_saddle) {
            double ubig = std::sqrt(vbig);
            for (int i = 0; i <= n; ++i) path2.pts.push_back(p2_sigma(-ubig + 2 * ubig * double(i) / n));
        }
    };
    auto clearance = [&](cplx p) {
        double d = distance_to_polyline(path1, p);
        if (needs_saddle) d = std::min(d, distance_to_polyline(path2, p));
        return d;
    };
    set_start(0.0);
    build();
    // A pole hugging the path out of 0 (the +-i/r poles for small t): start
    // the descent from a real point beyond it instead.
    double shift = 0;
    for (auto p : poles)
        if (clearance(p) < 0.5 * std::abs(p)) shift = std::max(shift, 2 * std::abs(p));
    if (shift > 0) {
        set_start(shift);
        build();
    }
    for (auto p : poles) {
        double dist = clearance(p);
        if (shift > 0) dist = std::min(dist, std::abs(p.imag()));
        if (dist < kPoleClearance) throw IllConditioned("pole within 1e-6 of the contour");
    }

    PanelOptions o1;
    o1.max_width = [](double v) { return 0.02 * (1.0 + v); };
    PanelOptions o2;
    o2.max_width = [](double) { return 0.05; };
    const double share = tol / ((needs_saddle ? 3 : 2) + (s0 > 0 ? 1 : 0));
    QuadResult res = integrate_smooth(f1, 0.0, vmax, share, o1);
    res.err_estimate += 2.0 * far * std::abs(std::exp(Q0)) * std::exp(-vmax);
    if (s0 > 0) {
        auto g = [&](double x) { return 2.0 * x * rest(cplx(x), r) * std::exp(-a * x * x); };
        QuadResult r0 = integrate_quadratic_phase(g, t, ig.sign * r, 0.0, s0, share, panel_options(ig, r));
        res.value += r0.value;
        res.err_estimate += r0.err_estimate;
        res.evaluations += r0.evaluations;
    }
    if (needs_saddle) {
        QuadResult r2 = integrate_smooth(f2, -umax, umax, share, o2);
        res.value += r2.value;
        res.err_estimate += r2.err_estimate + 4.0 * far * std::abs(std::exp(qsad)) * std::exp(-umax * umax);
        res.evaluations += r2.evaluations;
    }

    if (opt.include_residues && !poles.empty()) {
        // Loop: [0, R] on the real axis, then back along the deformed contour.
        Polyline loop;
        const double big = std::abs(path1.pts.back());
        loop.pts.push_back(0.0);
        loop.pts.push_back(big);
        const Polyline& first_back = needs_saddle ? path2 : path1;
        for (auto it = first_back.pts.rbegin(); it != first_back.pts.rend(); ++it) loop.pts.push_back(*it);
        if (needs_saddle)
            for (auto it = path1.pts.rbegin(); it != path1.pts.rend(); ++it) loop.pts.push_back(*it);
        auto F = [&](cplx s) { return 2.0 * s * rest(s, r) * std::exp((c2 * s + c1) * s); };
        for (std::size_t i = 0; i < poles.size(); ++i) {
            int w = winding(loop, poles[i]);
            if (w == 0) continue;
            // Keep the exponent nearly constant on the circle so the trapezoid
            // sum does not cancel.
            const cplx dq = 2.0 * c2 * poles[i] + c1;
            double rad = std::min(1.0, 1.0 / (std::abs(dq) + std::sqrt(std::abs(c2))));
            for (std::size_t j = 0; j < poles.size(); ++j)
                if (j != i) rad = std::min(rad, 0.5 * std::abs(poles[i] - poles[j]));
            double fmax = 0;
            auto circle = [&](int m) {
                cplx s = 0.0;
                for (int q = 0; q < m; ++q) {
                    cplx e = std::polar(1.0, 2 * kPi * q / m);
                    cplx v = F(poles[i] + rad * e);
                    fmax = std::max(fmax, std::abs(v));
                    s += v * e;
                }
                return s * rad / double(m);
            };
            cplx r128 = circle(128), r256 = circle(256);
            cplx contrib = 2.0 * kPi * kI * double(w) * r256;
            res.value += contrib;
            res.err_estimate += 2 * kPi * (std::abs(r256 - r128) + 64 * kEps * fmax * rad);
            res.evaluations += 384;
        }
    }
    res.method = "contour";
    res.err_estimate = std::max(res.err_estimate, kErrFloor);
    return res;
}

}  // namespace phgosc
