#include "phgosc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <regex>
#include <thread>

#include "phgosc/compactification.hpp"
#include "phgosc/errors.hpp"
#include "phgosc/halfline_fourier.hpp"
#include "phgosc/oscquad.hpp"
#include "phgosc/profiles.hpp"
#include "phgosc/quadrature.hpp"

namespace phgosc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFigTol = 1e-12;

double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
}

}  // namespace

std::string to_string(Scenario s) {
    switch (s) {
    case Scenario::fig_numeric: return "fig-numeric";
    case Scenario::gaussian_phase: return "gaussian-phase";
    case Scenario::bound_state: return "bound-state";
    case Scenario::fourier_table: return "fourier-table";
    }
    return "?";
}

Scenario parse_scenario(const std::string& s) {
    for (Scenario x : {Scenario::fig_numeric, Scenario::gaussian_phase, Scenario::bound_state, Scenario::fourier_table})
        if (s == to_string(x)) return x;
    throw DomainError("unknown scenario '" + s + "'");
}

std::vector<double> Grid::values() const {
    if (points < 2) throw DomainError("grid needs at least two points");
    if (!(hi > lo)) throw DomainError("grid must be increasing");
    if (kind == Kind::log && !(lo > 0)) throw DomainError("log grid needs a positive lower end");
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) {
        double u = double(i) / (points - 1);
        v[i] = kind == Kind::linear ? lo + u * (hi - lo) : lo * std::pow(hi / lo, u);
    }
    v.back() = hi;
    return v;
}

double Ray::r_at(double t) const {
    switch (kind) {
    case Kind::linear: return c * t;
    case Kind::sqrt: return c * std::sqrt(t);
    case Kind::fixed: return c;
    }
    return c;
}

Ray Ray::parse(const std::string& s) {
    static const std::regex lin(R"(\s*([^*\s]+)\s*\*\s*t\s*)"), sq(R"(\s*([^*\s]+)\s*\*\s*sqrt\(t\)\s*)");
    std::smatch m;
    Ray r;
    try {
        if (std::regex_match(s, m, lin)) {
            r = {Kind::linear, parse_number(m[1])};
        } else if (std::regex_match(s, m, sq)) {
            r = {Kind::sqrt, parse_number(m[1])};
        } else {
            r = {Kind::fixed, parse_number(s)};
        }
    } catch (const std::invalid_argument&) {
        throw DomainError("cannot parse ray '" + s + "'");
    }
    if (!(r.c > 0)) throw DomainError("ray coefficient must be positive");
    return r;
}

void ScanSpec::validate() const {
    (void)t_grid.values();
    if (!(ray.c > 0)) throw DomainError("ray coefficient must be positive");
    if (scenario == Scenario::fig_numeric && !(ray.kind == Ray::Kind::linear && ray.c == 2))
        throw DomainError("fig-numeric runs along r = 2t");
}

Table fig_numeric_scan(const ScanSpec& spec, unsigned threads) {
    spec.validate();
    const std::vector<double> ts = spec.t_grid.values();
    const OscIntegrand ig = make_integrand(example_profile(), 1);
    Table out;
    out.header = {"t", "re", "im", "t2_im", "envelope_estimate", "err"};
    out.rows.assign(ts.size(), {});
    std::vector<char> bad(ts.size(), 0);

    auto row = [&](std::size_t i) {
        const double t = ts[i], r = spec.ray.r_at(t);
        QuadResult q;
        try {
            q = difference_integral(ig, t, r, kFigTol);
        } catch (const AccuracyError& e) {
            q = e.best();
            bad[i] = 1;
        }
        out.rows[i] = {t, q.value.real(), q.value.imag(), t * t * q.value.imag(), 0.0, q.err_estimate};
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, unsigned(ts.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < ts.size(); i += threads) row(i);
        });
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (bad[i]) out.flagged.push_back(i);

    // Envelope column: log-log interpolation between detected peaks.
    try {
        FigAnalysis a = analyze_fig_numeric(out);
        if (a.peak_t.size() >= 2) {
            for (auto& rw : out.rows) {
                double t = rw[0];
                auto it = std::upper_bound(a.peak_t.begin(), a.peak_t.end(), t);
                std::size_t j = std::clamp<std::size_t>(it - a.peak_t.begin(), 1, a.peak_t.size() - 1);
                double x0 = std::log(a.peak_t[j - 1]), x1 = std::log(a.peak_t[j]);
                double y0 = std::log(a.peak_height[j - 1]), y1 = std::log(a.peak_height[j]);
                double u = std::clamp((std::log(t) - x0) / (x1 - x0), 0.0, 1.0);
                rw[4] = std::exp(y0 + u * (y1 - y0));
            }
        }
    } catch (const DomainError&) {
        // grid too coarse for the analysis; the envelope column stays zero
    }
    return out;
}

FigAnalysis analyze_fig_numeric(const Table& fig) {
    const std::size_t n = fig.rows.size();
    if (n < 8) throw DomainError("too few rows");
    std::vector<double> t(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = fig.rows[i][0];
        y[i] = fig.rows[i][3];
    }
    const double h = (t.back() - t.front()) / double(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(t[i] - t[i - 1] - h) > 1e-9 * std::max(1.0, t.back())) throw DomainError("grid is not uniform");
    if (h > kPi / 8) throw DomainError("grid does not resolve the oscillation");

    // Running mean over one period [t - pi, t + pi], trapezoid with linear
    // interpolation at the window ends.
    auto interp = [&](double x) {
        double u = (x - t.front()) / h;
        std::size_t i = std::min<std::size_t>(std::size_t(u), n - 2);
        double f = u - double(i);
        return y[i] + f * (y[i + 1] - y[i]);
    };
    auto window_mean = [&](double c) {
        double a = c - kPi, b = c + kPi;
        std::size_t i0 = std::size_t(std::ceil((a - t.front()) / h));
        std::size_t i1 = std::size_t(std::floor((b - t.front()) / h));
        double s = 0;
        double prev_x = a, prev_y = interp(a);
        for (std::size_t i = i0; i <= i1; ++i) {
            s += 0.5 * (t[i] - prev_x) * (y[i] + prev_y);
            prev_x = t[i];
            prev_y = y[i];
        }
        s += 0.5 * (b - prev_x) * (interp(b) + prev_y);
        return s / (2 * kPi);
    };
    FigAnalysis a;
    std::vector<double> z(n, 0.0);
    std::vector<char> has(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i] - kPi < t.front() || t[i] + kPi > t.back()) continue;
        double m = window_mean(t[i]);
        a.avg_t.push_back(t[i]);
        a.avg.push_back(m);
        z[i] = y[i] - m;
        has[i] = 1;
    }
    // Maxima of the residual, refined by a parabola through three samples.
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!has[i - 1] || !has[i + 1]) continue;
        if (z[i] > z[i - 1] && z[i] >= z[i + 1] && z[i] > 0) {
            double d = z[i - 1] - 2 * z[i] + z[i + 1];
            double off = d == 0 ? 0.0 : 0.5 * (z[i - 1] - z[i + 1]) / d;
            a.peak_t.push_back(t[i] + off * h);
            a.peak_height.push_back(z[i] - 0.25 * (z[i - 1] - z[i + 1]) * off);
        }
    }
    if (a.peak_t.size() >= 2) a.mean_spacing = (a.peak_t.back() - a.peak_t.front()) / double(a.peak_t.size() - 1);
    if (a.peak_t.size() >= 3) {
        double mx = 0, my = 0;
        const double m = double(a.peak_t.size());
        for (std::size_t i = 0; i < a.peak_t.size(); ++i) {
            mx += std::log(a.peak_t[i]) / m;
            my += std::log(a.peak_height[i]) / m;
        }
        double sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < a.peak_t.size(); ++i) {
            double dx = std::log(a.peak_t[i]) - mx;
            sxx += dx * dx;
            sxy += dx * (std::log(a.peak_height[i]) - my);
        }
        a.envelope_slope = sxy / sxx;
    }
    return a;
}

std::complex<double> limit_constant() {
    // e^{-2 i l} decays in the lower half plane; the rays arg l = -pi/4 and
    // arg l = 5 pi/4 leave the pole at -i below them.
    using C = std::complex<double>;
    const C right = std::polar(1.0, -kPi / 4), left = -std::polar(1.0, kPi / 4);
    auto f = [](C l) { return std::exp(C(0, -2) * l) * l / (1.0 + l * l); };
    auto g = [&](double u) { return f(u * right) * right - f(u * left) * left; };
    // the left ray runs from infinity to 0, hence the minus sign
    QuadResult q = integrate_smooth(g, 0.0, 40.0, 1e-14);
    return C(0, -1) * q.value;
}

std::complex<double> gaussian_wavepacket(double t, double x) {
    const std::complex<double> d(1, 2 * t);
    return std::exp(-x * x / d) / std::sqrt(d);
}

double gaussian_phase_chart(double s, double rho) {
    if (!(s > 0) || !(rho > 0)) throw DomainError("need s > 0 and rho > 0");
    const double x = 1 / rho, t = s * x;
    const std::complex<double> d(1, 2 * t);
    // Continuous branch of arg G: the prefactor stays in the right half plane.
    const double theta = -0.5 * std::arg(d) + 2 * t * x * x / std::norm(d);
    if (!std::isfinite(theta)) throw DomainError("phase unwrapping failed");
    // Cross-check the branch against the principal argument.
    const double wrapped = std::arg(gaussian_wavepacket(t, x));
    const double k = std::round((theta - wrapped) / (2 * kPi));
    if (std::abs(theta - wrapped - 2 * kPi * k) > 1e-6 * std::max(1.0, std::abs(theta)))
        throw DomainError("phase unwrapping failed");
    return 2 * s * rho * theta;
}

std::complex<double> bound_state_term(double E, double t, double r, const std::function<double(double)>& profile) {
    if (!(E >= 0)) throw DomainError("E must be nonnegative");
    return std::polar(1.0, -E * t) * profile(r);
}

Table gaussian_phase_scan(const ScanSpec& spec) {
    spec.validate();
    Table out;
    out.header = {"s", "rho", "scaled_phase"};
    for (double rho : spec.t_grid.values()) out.rows.push_back({spec.ray.c, rho, gaussian_phase_chart(spec.ray.c, rho)});
    return out;
}

Table bound_state_scan(const ScanSpec& spec) {
    spec.validate();
    Table out;
    out.header = {"t", "r", "re", "im", "modulus", "bdf_nf", "bdf_dilF", "bdf_parF", "bdf_kf"};
    auto prof = [](double r) { return std::exp(-r * r); };
    for (double t : spec.t_grid.values()) {
        const double r = std::max(1.0, spec.ray.r_at(t));
        const auto v = bound_state_term(1.0, t, r, prof);
        const ChartPoint p = chart(t, r);
        out.rows.push_back({t, r, v.real(), v.imag(), std::abs(v), p.bdf_nf, p.bdf_dilF, p.bdf_parF, p.bdf_kf});
    }
    return out;
}

Table fourier_table_scan(const ScanSpec& spec) {
    spec.validate();
    Table out;
    out.header = {"j", "k", "tau", "re", "im"};
    for (double j : {-0.5, 0.0, 0.5, 1.0, 2.5})
        for (int k = 0; k <= 2; ++k)
            for (double tau : spec.t_grid.values()) {
                const auto v = monomial_transform({j, k, tau});
                out.rows.push_back({j, double(k), tau, v.real(), v.imag()});
            }
    return out;
}

Table run_scan(const ScanSpec& spec, unsigned threads) {
    switch (spec.scenario) {
    case Scenario::fig_numeric: return fig_numeric_scan(spec, threads);
    case Scenario::gaussian_phase: return gaussian_phase_scan(spec);
    case Scenario::bound_state: return bound_state_scan(spec);
    case Scenario::fourier_table: return fourier_table_scan(spec);
    }
    throw DomainError("unknown scenario");
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
    os << '\n';
    char buf[32];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.15g", row[i]);
            os << (i ? "," : "") << buf;
        }
        os << '\n';
    }
}

void emit_csv(const Table& table, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    write_csv(f, table);
    f.close();
    if (!f) throw Error("write to '" + path + "' failed");
}

}  // namespace phgosc
