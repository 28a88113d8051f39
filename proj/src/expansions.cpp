#include "phgosc/expansions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "phgosc/errors.hpp"
#include "phgosc/indexsets.hpp"
#include "phgosc/special_functions.hpp"

namespace phgosc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

bool is_natural(cplx d) {
    if (std::abs(d.imag()) > kIndexTol) return false;
    double n = std::round(d.real());
    return n >= 0 && std::abs(d.real() - n) <= kIndexTol * std::max(1.0, std::abs(d.real()));
}

void check_order(const PhgSeries& s, double order, const char* what) {
    if (order > s.remainder_order() + kIndexTol)
        throw InvalidTruncation(std::string(what) + ": order exceeds the expansion's remainder order");
}

// Distinct exponents of a series with Re j <= order.
std::vector<cplx> exponents(const PhgSeries& s, double order) {
    std::vector<cplx> out;
    for (const auto& t : s.terms()) {
        if (t.j.real() > order + kIndexTol) continue;
        if (std::none_of(out.begin(), out.end(), [&](cplx e) { return same_exponent(e, t.j); }))
            out.push_back(t.j);
    }
    return out;
}

// Chebyshev interpolation of g on [c - d, c + d]; returns Taylor coefficients at c
// (coefficient of x^n, x = lambda - c) up to degree `deg`.
std::vector<cplx> taylor_at(const std::function<cplx(double)>& g, double c, double d, int deg) {
    const int n = 24;
    std::vector<cplx> vals(n);
    std::vector<double> nodes(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = std::cos(kPi * (i + 0.5) / n);
        vals[i] = g(c + d * nodes[i]);
    }
    // Chebyshev coefficients a_m.
    std::vector<cplx> a(n);
    for (int m = 0; m < n; ++m) {
        cplx s = 0;
        for (int i = 0; i < n; ++i) s += vals[i] * std::cos(m * kPi * (i + 0.5) / n);
        a[m] = s * (m == 0 ? 1.0 : 2.0) / double(n);
    }
    // Monomial coefficients in y = x/d from T_m recurrences.
    std::vector<std::vector<double>> T(n, std::vector<double>(n, 0.0));
    T[0][0] = 1;
    if (n > 1) T[1][1] = 1;
    for (int m = 2; m < n; ++m)
        for (int q = 0; q < n; ++q) T[m][q] = (q > 0 ? 2 * T[m - 1][q - 1] : 0.0) - T[m - 2][q];
    std::vector<cplx> out(deg + 1);
    for (int q = 0; q <= deg; ++q) {
        cplx s = 0;
        for (int m = q; m < n; ++m) s += a[m] * T[m][q];
        out[q] = s / std::pow(d, q);
    }
    return out;
}

ExpansionResult numeric_add(ExpansionResult acc, const QuadResult& q, cplx weight) {
    acc.value += weight * q.value;
    acc.err_estimate += std::abs(weight) * q.err_estimate;
    return acc;
}

QuadResult weighted_minus(const PhgProfile& profile, double t, double r, double tol,
                          const std::function<double(double)>& weight) {
    OscIntegrand ig = make_integrand(profile, -1);
    const auto& phi = profile.evaluate;
    return quad_panels_amplitude(
        ig,
        [&](double s) {
            double w = weight(s);
            return w == 0.0 ? cplx(0.0) : 2.0 * s * w * phi(s, r);
        },
        t, r, tol);
}

}  // namespace

cplx profile_derivative(const PhgProfile& p, double sigma, double r, int n, double h) {
    if (n == 0) return p.evaluate(sigma, r);
    if (p.derivative) return p.derivative(sigma, r, n);
    auto cd = [&](double hh) {
        cplx s = 0;
        for (int i = 0; i <= n; ++i)
            s += ((i % 2) ? -1.0 : 1.0) * binomial(n, i) * p.evaluate(sigma + (n / 2.0 - i) * hh, r);
        return s / std::pow(hh, n);
    };
    constexpr int levels = 4;
    std::array<cplx, levels> tab;
    for (int l = 0; l < levels; ++l) tab[l] = cd(h / std::pow(2.0, l));
    cplx prev = tab[levels - 1];
    for (int c = 1; c < levels; ++c) {
        double f = std::pow(4.0, c);
        for (int l = levels - 1; l >= c; --l) tab[l] = (f * tab[l] - tab[l - 1]) / (f - 1);
        if (c == levels - 2) prev = tab[levels - 1];
    }
    double noise = std::abs(tab[levels - 1] - prev);
    double scale = std::abs(p.evaluate(sigma, r)) / std::pow(h, n) * 1e-10;
    if (noise > std::max(std::abs(tab[levels - 1]), scale))
        throw AccuracyError("finite-difference derivative dominated by noise",
                            QuadResult{tab[levels - 1], noise, "richardson", 4L * (n + 1)});
    return tab[levels - 1];
}

ExpansionResult kf_expansion(const ExpansionRequest& req, double t, double r) {
    if (!(t > 0) || !(r > 0)) throw DomainError("kf expansion needs t > 0 and r > 0");
    const PhgSeries& se = req.profile.sigma_expansion;
    check_order(se, req.order, "kf_expansion");
    ExpansionResult out;
    const double rho = 1 / r, tau = t * rho * rho, lrho = std::log(rho);
    if (tau <= 1) out.notes.push_back("out of regime: tau <= 1");
    const ParamPoint pr{r, 0};

    // lambda-coefficients phi^{j,m} = sum_{k>=m} a_{j,k}(r) rho^j C(k,m) log^{k-m} rho
    auto lam_coeff = [&](cplx j, int m) -> cplx {
        cplx s = 0;
        for (const auto& term : se.terms()) {
            if (!same_exponent(term.j, j) || term.k < m) continue;
            s += term.coeff(pr) * binomial(term.k, m) * std::pow(lrho, term.k - m);
        }
        return s * BranchPolicy::pow(rho, j);
    };

    std::vector<cplx> base = exponents(se, req.order);
    std::vector<cplx> outs;  // J = j + j0
    for (cplx j : base)
        for (int n = 0; j.real() + n <= req.order + kIndexTol; ++n) {
            cplx J = j + double(n);
            if (std::none_of(outs.begin(), outs.end(), [&](cplx e) { return same_exponent(e, J); }))
                outs.push_back(J);
        }

    cplx sum = 0;
    int truncated_j0 = 0;
    for (cplx J : outs) {
        // xi-expansion of e^{+-i xi^{1/2}} phi(xi^{1/2}): coefficient of xi^{J/2} log^K xi
        int kmax = -1;
        for (cplx j : base)
            if (is_natural(J - j)) kmax = std::max(kmax, se.max_log_power(j));
        if (kmax < 0) continue;
        std::vector<cplx> tilde(kmax + 1, 0.0);
        for (int K = 0; K <= kmax; ++K) {
            for (cplx j : base) {
                if (!is_natural(J - j)) continue;
                int j0 = static_cast<int>(std::lround((J - j).real()));
                truncated_j0 = std::max(truncated_j0, j0);
                tilde[K] += BranchPolicy::pow_pm_i(req.sign, double(j0)) / factorial(j0) * std::pow(2.0, -K) *
                            lam_coeff(j, K);
            }
        }
        const cplx jj = J / 2.0;
        for (int k = 0; k <= kmax; ++k) {
            cplx c = 0;
            for (int K = k; K <= kmax; ++K) c += tilde[K] * c_coeff({jj, K, k, 1});
            sum += c * BranchPolicy::pow(tau, -jj - 1.0) * std::pow(std::log(tau), k);
        }
    }
    out.value = rho * rho * sum;
    out.notes.push_back("inner j0 sum truncated at j0 <= " + std::to_string(truncated_j0));
    return out;
}

QuadResult lambda_oscillatory_integral(const std::function<cplx(double)>& g, double tau, int sign, double lower,
                                       double tol) {
    if (!(tau > 0)) throw DomainError("lambda integral needs tau > 0");
    const double L = std::max({20.0, 12.0 / std::sqrt(tau), lower + 2.0});
    PanelOptions o;
    o.max_width = [](double) { return 0.25; };
    // Growing g cancels heavily; roundoff bounds what the head can deliver.
    const auto abs_g = [&](double l) { return cplx(std::abs(g(l))); };
    const double l1 = integrate_smooth(abs_g, lower, L, 1e-3 * std::max(1.0, std::abs(g(L))) * (L - lower)).value.real();
    const double head_tol = std::max(tol / 2, 200 * std::numeric_limits<double>::epsilon() * l1);
    QuadResult head = integrate_quadratic_phase(g, tau, double(sign), lower, L, head_tol, o);

    // Tail: T(g) = -e^{i theta(L)} sum_m (-1)^m h_m(L), h_m = g_m / (i theta'), g_{m+1} = h_m'.
    constexpr int M = 5, deg = 10;
    std::vector<cplx> gs = taylor_at(g, L, 0.25 * L, deg);
    const double a0 = 2 * tau * L + sign, a1 = 2 * tau;  // theta'(L + x) = a0 + a1 x
    cplx tail = 0;
    double last = 0;
    for (int m = 0; m < M; ++m) {
        // h = g / (i (a0 + a1 x)) as a power series
        std::vector<cplx> h(gs.size());
        for (std::size_t q = 0; q < gs.size(); ++q) {
            cplx prev = q > 0 ? h[q - 1] : cplx(0.0);
            h[q] = (gs[q] / kI - a1 * prev) / a0;
        }
        tail += ((m % 2) ? -1.0 : 1.0) * h[0];
        last = std::abs(h[0]);
        if (h.size() < 2) break;
        std::vector<cplx> dg(h.size() - 1);
        for (std::size_t q = 1; q < h.size(); ++q) dg[q - 1] = double(q) * h[q];
        gs = std::move(dg);
    }
    const double th = tau * L * L + sign * L;
    head.value += -std::polar(1.0, th) * tail;
    head.err_estimate += last + 1e-12 * std::abs(tail);
    head.method = "lambda-panels+ibp";
    return head;
}

ExpansionResult parF_expansion(const ExpansionRequest& req, double t, double r) {
    if (!(t > 0) || !(r > 0)) throw DomainError("parF expansion needs t > 0 and r > 0");
    const PhgSeries& re = req.profile.r_expansion;
    check_order(re, req.order, "parF_expansion");
    ExpansionResult out;
    const double rho = 1 / r, tau = t * rho * rho;
    if (r < 10) out.notes.push_back("out of regime: r < 10");
    for (const auto& term : re.terms()) {
        if (term.j.real() > req.order + kIndexTol) continue;
        auto coeff = term.coeff;
        auto g = [coeff](double l) { return 2.0 * l * coeff(ParamPoint{l, 0}); };
        cplx w = BranchPolicy::pow(rho, term.j + 2.0) * std::pow(std::log(rho), term.k);
        QuadResult h = lambda_oscillatory_integral(g, tau, req.sign, 0.0, req.tol / std::max(std::abs(w), 1e-300));
        out = numeric_add(out, h, w);
    }
    return out;
}

ExpansionResult stationary_phase_dilf(const ExpansionRequest& req, double t, double rhat, int K) {
    if (req.sign != -1) throw DomainError("stationary phase applies to the minus sign");
    if (!(t > 0) || !(rhat > 0)) throw DomainError("need t > 0 and rhat > 0");
    if (K < 0) throw DomainError("K must be nonnegative");
    ExpansionResult out;
    const double r = t * rhat, s0 = rhat / 2, h = std::min(0.05, rhat / 20);
    // Amplitude A = 2 sigma phi; A^(n) = 2 (sigma phi^(n) + n phi^(n-1)).
    auto amp = [&](int n) {
        cplx d = s0 * profile_derivative(req.profile, s0, r, n, h);
        if (n > 0) d += double(n) * profile_derivative(req.profile, s0, r, n - 1, h);
        return 2.0 * d;
    };
    cplx sum = 0;
    for (int j = 0; j <= K; ++j) {
        double a = j + 0.5;
        cplx mit_pow = std::pow(t, a) * std::exp(-kI * (kPi / 2) * a);  // (-i t)^{j+1/2}
        sum += gamma(a).real() / (factorial(2 * j) * mit_pow) * amp(2 * j);
    }
    out.value = std::exp(-kI * (r * r / (4 * t))) * sum;
    if (t < 10) out.notes.push_back("out of regime: t < 10");
    return out;
}

StationarySplit stationary_split(const ExpansionRequest& req, double t, double r) {
    if (req.sign != -1) throw DomainError("stationary split applies to the minus sign");
    if (!(t > 0)) throw DomainError("need t > 0");
    const double ss = r / (2 * t);
    const auto& psi = req.cutoffs.psi;
    StationarySplit out;
    out.stat = weighted_minus(req.profile, t, r, req.tol / 2, [&](double s) { return psi(s - ss); });
    out.non = weighted_minus(req.profile, t, r, req.tol / 2, [&](double s) { return 1 - psi(s - ss); });
    return out;
}

DecompositionResult thmD_decompose(const ExpansionRequest& req, double t, double r) {
    if (req.sign != -1) throw DomainError("the decomposition applies to the minus sign");
    if (!(t > 0) || !(r >= 1)) throw DomainError("need t > 0 and r >= 1");
    const double ss = r / (2 * t);
    const auto& psi = req.cutoffs.psi;
    const double tol = req.tol / 5;
    auto w = [r](double s) { return partition_weights(s, r); };
    QuadResult low = weighted_minus(req.profile, t, r, tol, [&](double s) { return w(s).low; });
    QuadResult mid_osc =
        weighted_minus(req.profile, t, r, tol, [&](double s) { return w(s).mid * psi(s / ss - 1); });
    QuadResult mid_phg =
        weighted_minus(req.profile, t, r, tol, [&](double s) { return w(s).mid * (1 - psi(s / ss - 1)); });
    QuadResult high_stat = weighted_minus(req.profile, t, r, tol, [&](double s) { return w(s).high * psi(s - ss); });
    QuadResult high_non =
        weighted_minus(req.profile, t, r, tol, [&](double s) { return w(s).high * (1 - psi(s - ss)); });

    DecompositionResult out;
    out.phase = -(1 - req.cutoffs.chi(t)) * r * r / (4 * t);
    const cplx e = std::polar(1.0, out.phase);
    out.osc_value = (mid_osc.value + high_stat.value) / e;
    out.phg_value = low.value + mid_phg.value + high_non.value;
    out.predicted_total = e * out.osc_value + out.phg_value;
    out.err_estimate = low.err_estimate + mid_osc.err_estimate + mid_phg.err_estimate + high_stat.err_estimate +
                       high_non.err_estimate;
    return out;
}

CornerResult corner_kf_expansion(const PhgProfile& profile, int sign, double tau, double r, double order,
                                 double tol) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    if (!(tau > 0) || !(r > 1)) throw DomainError("corner expansion needs tau > 0 and r > 1");
    const PhgSeries& ce = profile.corner_expansion;
    check_order(ce, order, "corner_kf_expansion");
    CornerResult out;
    const double lr = std::log(r);
    for (const auto& term : ce.terms()) {
        if (term.j.real() > order + kIndexTol) continue;
        cplx total = 0;
        for (int kappa = 0; kappa <= term.k; ++kappa) {
            const int p = term.k - kappa;
            const cplx j = term.j;
            auto coeff = term.coeff;
            auto g = [coeff, j, p](double l) -> cplx {
                cplx c = coeff(ParamPoint{l, 0});
                if (c == 0.0) return 0.0;
                return c * BranchPolicy::pow(l, 1.0 + j) * std::pow(std::log(l), p);
            };
            QuadResult q = lambda_oscillatory_integral(g, tau, sign, 0.0, tol);
            cplx w = 2.0 * BranchPolicy::pow(r, -term.j) * ((kappa % 2) ? -1.0 : 1.0) * binomial(term.k, kappa) *
                     std::pow(lr, kappa);
            total += w * q.value;
            out.err_estimate += std::abs(w) * q.err_estimate;
        }
        out.terms.push_back({term.j, term.k, total});
        out.rescaled += total;
    }
    out.value = out.rescaled / (r * r);
    out.err_estimate /= r * r;
    return out;
}

JlemProfile jlem_fixture() {
    return [](double sigma, double lambda) { return std::cos(sigma) * lambda * lambda / (1 + lambda * lambda); };
}

cplx jlem_integral(int k, double tau, const JlemProfile& phi) {
    if (!(tau > 0)) throw DomainError("tau must be positive");
    if (k < 0) throw DomainError("k must be nonnegative");
    // Normalize by the expected size so the tolerance is relative.
    const double scale = std::pow(tau, -0.5 - k);
    auto g = [&](double d) -> cplx {
        double w = window_psi(2 * d);
        if (w == 0) return 0.0;
        double x = d + 0.5;
        return scale * std::pow(d, 2 * k) * w * phi(x, x / tau);
    };
    PanelOptions o;
    o.max_width = [](double) { return 1.0 / 64; };
    // The oscillatory sum cancels down from the L1 norm; ask for no more than roundoff allows.
    const double l1 = integrate_smooth([&](double d) -> cplx { return std::abs(g(d)); }, -0.25, 0.25,
                                     1e-6 * scale * std::pow(0.25, 2 * k + 1), o).value.real();
    const double tol = std::max(1e-9, 200 * std::numeric_limits<double>::epsilon() * l1);
    return integrate_quadratic_phase(g, 1 / tau, 0.0, -0.25, 0.25, tol, o).value / scale;
}

std::vector<double> default_jlem_grid() {
    std::vector<double> g;
    for (int i = 0; i < 13; ++i) g.push_back(std::pow(10.0, -6.0 + i / 6.0));
    return g;
}

double fresnel_moment_scaling_check(int k, const std::vector<double>& tau_grid, const JlemProfile& phi) {
    if (tau_grid.size() < 3) throw Inconclusive("need at least three grid points");
    std::vector<double> x, y;
    for (double tau : tau_grid) {
        double m = std::abs(jlem_integral(k, tau, phi));
        if (!(m > 0) || !std::isfinite(m)) throw Inconclusive("moment vanishes on the grid");
        x.push_back(std::log(tau));
        y.push_back(std::log(m));
    }
    const double n = double(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i] / n;
        my += y[i] / n;
    }
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    double worst = 0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(y[i] - my - slope * (x[i] - mx)));
    if (worst > 0.1) throw Inconclusive("log-log fit residual too large");
    return slope;
}

}  // namespace phgosc
