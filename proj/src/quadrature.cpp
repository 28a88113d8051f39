#include "phgosc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace phgosc {

namespace {

// Kronrod 15-point abscissae (nonnegative half) and weights; Gauss 7-point weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
    double a, b;
    cplx value;
    double err;
};

// theta(m) = c2 m^2 + c1 m reduced mod 2 pi using error-free products, so the
// phase stays accurate when theta itself is large.
double reduced_phase(double c2, double c1, double m) {
    auto two_prod = [](double a, double b, double& err) {
        double p = a * b;
        err = std::fma(a, b, -p);
        return p;
    };
    auto two_sum = [](double a, double b, double& err) {
        double s = a + b;
        double bb = s - a;
        err = (a - (s - bb)) + (b - bb);
        return s;
    };
    double e1, e2, e3, e4;
    double mm = two_prod(m, m, e1);
    double q = two_prod(c2, mm, e2);
    double lo = e2 + c2 * e1;
    double l = two_prod(c1, m, e3);
    double hi = two_sum(q, l, e4);
    lo += e3 + e4;
    constexpr double kTwoPiHi = 6.283185307179586, kTwoPiLo = 2.4492935982947064e-16;
    double n = std::nearbyint(hi / kTwoPiHi);
    double e5, e6;
    double nhi = two_prod(n, kTwoPiHi, e5);
    double d = two_sum(hi, -nhi, e6);
    return d + (lo + e6 - e5 - n * kTwoPiLo);
}

struct Evaluator {
    const std::function<cplx(double)>& g;
    double c2, c1;
    long evals = 0;

    Panel panel(double a, double b) {
        double c = 0.5 * (a + b), h = 0.5 * (b - a);
        const bool osc = c2 != 0.0 || c1 != 0.0;
        const double base = osc ? reduced_phase(c2, c1, c) : 0.0;
        const double slope = 2 * c2 * c + c1;
        auto f = [&](double dx) {
            ++evals;
            cplx v = g(c + dx);
            if (!osc) return v;
            double th = base + (slope + c2 * dx) * dx;
            return v * cplx(std::cos(th), std::sin(th));
        };
        cplx fc = f(0.0);
        cplx rk = fc * kWgk[7];
        cplx rg = fc * kWg[3];
        double abs_sum = std::abs(fc) * kWgk[7];
        for (int i = 0; i < 7; ++i) {
            double dx = h * kXgk[i];
            cplx f1 = f(-dx), f2 = f(dx);
            rk += kWgk[i] * (f1 + f2);
            abs_sum += kWgk[i] * (std::abs(f1) + std::abs(f2));
            if (i % 2 == 1) rg += kWg[i / 2] * (f1 + f2);
        }
        rk *= h;
        rg *= h;
        double err = std::abs(rk - rg) + 50 * kEps * abs_sum * std::abs(h);
        return {a, b, rk, err};
    }
};

// Breakpoints on [p, q] where theta is monotone, one per phase_step of phase change.
void monotone_breaks(double c2, double c1, double p, double q, double step, std::vector<double>& out) {
    auto theta = [&](double x) { return (c2 * x + c1) * x; };
    double t0 = theta(p), t1 = theta(q);
    double span = std::abs(t1 - t0);
    long n = static_cast<long>(std::ceil(span / step));
    out.push_back(p);
    if (n > 1) {
        double dir = t1 > t0 ? 1.0 : -1.0;
        for (long m = 1; m < n; ++m) {
            double level = t0 + dir * step * double(m);
            double x;
            if (c2 == 0.0) {
                x = level / c1;
            } else {
                // c2 x^2 + c1 x - level = 0, root inside [p, q]
                double disc = std::max(0.0, c1 * c1 + 4 * c2 * level);
                double sq = std::sqrt(disc);
                double qv = -0.5 * (c1 + (c1 >= 0 ? sq : -sq));
                double r1 = qv / c2;
                double r2 = qv != 0.0 ? -level / qv : r1;
                double lo = std::min(p, q), hi = std::max(p, q);
                double slack = 1e-9 * (hi - lo);
                x = (r1 >= lo - slack && r1 <= hi + slack) ? r1 : r2;
            }
            x = std::clamp(x, std::min(p, q), std::max(p, q));
            if (x > out.back()) out.push_back(x);
        }
    }
}

QuadResult run(const std::function<cplx(double)>& g, double c2, double c1, double a, double b,
               double tol, const PanelOptions& opt, const char* method) {
    QuadResult res;
    res.method = method;
    if (a == b) {
        res.err_estimate = kErrFloor;
        return res;
    }
    double sign = 1;
    if (b < a) {
        std::swap(a, b);
        sign = -1;
    }

    std::vector<double> br;
    if (c2 != 0.0 || c1 != 0.0) {
        double xs = c2 != 0.0 ? -c1 / (2 * c2) : std::numeric_limits<double>::infinity();
        if (xs > a && xs < b) {
            monotone_breaks(c2, c1, a, xs, opt.phase_step, br);
            monotone_breaks(c2, c1, xs, b, opt.phase_step, br);
        } else {
            monotone_breaks(c2, c1, a, b, opt.phase_step, br);
        }
    } else {
        int n = std::max(1, opt.min_panels);
        for (int i = 0; i < n; ++i) br.push_back(a + (b - a) * i / n);
    }
    br.push_back(b);

    // Split panels wider than the local amplitude scale.
    std::vector<double> edges;
    edges.push_back(br.front());
    for (std::size_t i = 1; i < br.size(); ++i) {
        double lo = edges.back(), hi = br[i];
        if (hi <= lo) continue;
        if (opt.max_width) {
            double x = lo;
            while (x < hi) {
                double w = opt.max_width(x);
                if (!(w > 0)) w = hi - x;
                double nx = std::min(hi, x + w);
                if (hi - nx < 0.25 * w) nx = hi;
                edges.push_back(nx);
                x = nx;
            }
        } else {
            edges.push_back(hi);
        }
    }

    Evaluator ev{g, c2, c1};
    std::vector<Panel> panels;
    panels.reserve(edges.size());
    double total_err = 0;
    for (std::size_t i = 1; i < edges.size(); ++i) {
        panels.push_back(ev.panel(edges[i - 1], edges[i]));
        total_err += panels.back().err;
    }

    if (total_err > tol) {
        auto cmp = [&](std::size_t x, std::size_t y) {
            if (panels[x].err != panels[y].err) return panels[x].err < panels[y].err;
            return x > y;
        };
        std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> heap(cmp);
        for (std::size_t i = 0; i < panels.size(); ++i) heap.push(i);
        while (total_err > tol && ev.evals < opt.max_evals) {
            std::size_t i = heap.top();
            heap.pop();
            Panel p = panels[i];
            double mid = 0.5 * (p.a + p.b);
            if (!(mid > p.a && mid < p.b)) {
                // Cannot split further; leave it at its estimate.
                panels[i].err = 0;
                total_err -= p.err;
                res.err_estimate += p.err;
                continue;
            }
            Panel left = ev.panel(p.a, mid), right = ev.panel(mid, p.b);
            total_err += left.err + right.err - p.err;
            panels[i] = left;
            panels.push_back(right);
            heap.push(i);
            heap.push(panels.size() - 1);
        }
    }

    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    CompensatedSum s;
    double err = res.err_estimate;
    for (const auto& p : panels) {
        s.add(p.value);
        err += p.err;
    }
    res.value = sign * s.value();
    res.err_estimate = std::max(err, kErrFloor);
    res.evaluations = ev.evals;
    if (err > tol) throw AccuracyError("quadrature tolerance not reached within evaluation budget", res);
    return res;
}

}  // namespace

void CompensatedSum::add_part(double x, double& s, double& c) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
        c += (s - t) + x;
    else
        c += (x - t) + s;
    s = t;
}

void CompensatedSum::add(cplx x) {
    double sr = sum_.real(), si = sum_.imag(), cr = comp_.real(), ci = comp_.imag();
    add_part(x.real(), sr, cr);
    add_part(x.imag(), si, ci);
    sum_ = {sr, si};
    comp_ = {cr, ci};
}

QuadResult integrate_quadratic_phase(const std::function<cplx(double)>& g, double c2, double c1,
                                     double a, double b, double tol, const PanelOptions& opt) {
    return run(g, c2, c1, a, b, tol, opt, "panels");
}

QuadResult integrate_smooth(const std::function<cplx(double)>& g, double a, double b, double tol,
                            const PanelOptions& opt) {
    return run(g, 0.0, 0.0, a, b, tol, opt, "gauss-kronrod");
}

}  // namespace phgosc
