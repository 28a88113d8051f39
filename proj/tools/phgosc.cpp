#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "criteria.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "phgosc/compactification.hpp"
#include "phgosc/errors.hpp"
#include "phgosc/expansions.hpp"
#include "phgosc/halfline_fourier.hpp"
#include "phgosc/harness.hpp"
#include "phgosc/indexsets.hpp"
#include "phgosc/oscquad.hpp"
#include "phgosc/profiles.hpp"
#include "phgosc/special_functions.hpp"

using namespace phgosc;

namespace {

// "1.5", "2i", "0.5-3i"
cplx parse_complex(const std::string& s) {
    static const std::regex re(R"(\s*([+-]?[0-9.eE+-]*?)?(?:([+-]?[0-9.eE]*)i)?\s*)");
    std::smatch m;
    try {
        if (s.find('i') == std::string::npos) return std::stod(s);
        if (std::regex_match(s, m, re)) {
            auto num = [](const std::string& x, double dflt) {
                if (x.empty()) return dflt;
                if (x == "+") return 1.0;
                if (x == "-") return -1.0;
                return std::stod(x);
            };
            std::string re_part = m[1], im_part = m[2];
            return {num(re_part, 0.0), num(im_part, 1.0)};
        }
    } catch (const std::exception&) {
    }
    throw DomainError("cannot parse complex number '" + s + "'");
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw DomainError("sign must be + or -");
}

std::string num(double x) {
    char b[40];
    std::snprintf(b, sizeof b, "%.15g", x);
    return b;
}

std::string cnum(cplx z) { return num(z.real()) + "," + num(z.imag()); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic expansions and quadrature oracles for Schrodinger-type oscillatory integrals"};
    app.require_subcommand(1);

    // coeffs
    std::string j_text = "0", sign_text = "+";
    int k = 0, kappa = 0;
    auto* coeffs = app.add_subcommand("coeffs", "c_{j,k,kappa;sign} as re,im");
    coeffs->add_option("--j", j_text, "exponent j (complex allowed, e.g. 0.5+1i)");
    coeffs->add_option("--k", k, "log power k")->check(CLI::NonNegativeNumber);
    coeffs->add_option("--kappa", kappa, "output log power")->check(CLI::NonNegativeNumber);
    coeffs->add_option("--sign", sign_text, "+ or -");

    // fourier
    double tau = 1;
    bool with_oracle = false;
    auto* fourier = app.add_subcommand("fourier", "Fourier transform of Theta(xi) xi^j log^k xi");
    fourier->add_option("--j", j_text);
    fourier->add_option("--k", k)->check(CLI::NonNegativeNumber);
    fourier->add_option("--tau", tau)->required();
    fourier->add_flag("--oracle", with_oracle, "also run the eps-regularized quadrature oracle");

    // quad
    std::string integrand = "example", method = "panels";
    double t = 1, r = 1, tol = 1e-10;
    auto* quad = app.add_subcommand("quad", "I_+-[phi](t, r) by quadrature; prints re,im,err,evals");
    quad->add_option("--integrand", integrand)->check(CLI::IsMember({"example", "gaussian"}));
    quad->add_option("--t", t)->required();
    quad->add_option("--r", r)->required();
    quad->add_option("--sign", sign_text)->check(CLI::IsMember({"+", "-", "diff"}));
    quad->add_option("--tol", tol);
    quad->add_option("--method", method)->check(CLI::IsMember({"panels", "contour"}));

    // chart
    auto* chart_cmd = app.add_subcommand("chart", "boundary-defining functions and regime label as JSON");
    chart_cmd->add_option("--t", t)->required();
    chart_cmd->add_option("--r", r)->required();
    double threshold = 0.1;
    chart_cmd->add_option("--threshold", threshold, "bdf value below which a face counts as reached");

    // expand
    std::string face = "kf", profile = "gaussian", dump, indexset;
    double order = 0;
    bool compare = false;
    auto* expand = app.add_subcommand("expand", "evaluate a face expansion, optionally against the oracle");
    expand->add_option("--face", face)->check(CLI::IsMember({"kf", "parF", "dilF", "corner"}));
    expand->add_option("--profile", profile);
    expand->add_option("--t", t)->required();
    expand->add_option("--r", r)->required();
    expand->add_option("--order", order, "keep terms with Re j <= order (dilF: number of terms K)");
    expand->add_option("--sign", sign_text);
    expand->add_flag("--compare", compare, "also print oracle, absolute and relative error");
    expand->add_option("--dump", dump, "write the face's input series as CSV to this path");
    expand->add_option("--indexset", indexset, "restrict the sigma expansion to this index set, e.g. 0:0,1:1");

    // scan
    std::string scenario = "fig-numeric", out, ray = "2*t";
    double tmin = 1, tmax = 400;
    int points = 2000;
    bool log_grid = false;
    unsigned threads = 0;
    auto* scan = app.add_subcommand("scan", "reproduction scenarios written as CSV");
    scan->add_option("--scenario", scenario)
        ->check(CLI::IsMember({"fig-numeric", "gaussian-phase", "bound-state", "fourier-table"}));
    scan->add_option("--out", out)->required();
    scan->add_option("--tmin", tmin);
    scan->add_option("--tmax", tmax);
    scan->add_option("--points", points);
    scan->add_option("--ray", ray, "c*t, c*sqrt(t) or a constant");
    scan->add_flag("--log", log_grid, "log-spaced grid instead of linear");
    scan->add_option("--threads", threads);

    auto* validate = app.add_subcommand("validate", "run the acceptance suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*coeffs) {
            std::cout << cnum(c_coeff({parse_complex(j_text), k, kappa, parse_sign(sign_text)})) << "\n";
            return 0;
        }
        if (*fourier) {
            const cplx j = parse_complex(j_text);
            const cplx v = monomial_transform({j, k, tau});
            std::cout << "formula " << cnum(v) << "\n";
            if (with_oracle) {
                if (j.imag() != 0) throw Unsupported("the oracle takes real j");
                const cplx o = oracle::monomial_transform(j.real(), k, tau);
                std::cout << "oracle " << cnum(o) << "\nrel_diff " << num(std::abs(v - o) / std::abs(o)) << "\n";
            }
            return 0;
        }
        if (*quad) {
            const PhgProfile p = profile_by_name(integrand);
            QuadResult q;
            if (sign_text == "diff") {
                if (method != "panels") throw Unsupported("diff uses the full-line panel oracle");
                q = difference_integral(make_integrand(p, 1), t, r, tol);
            } else {
                OscIntegrand ig = make_integrand(p, parse_sign(sign_text));
                q = method == "panels" ? quad_panels(ig, t, r, tol) : quad_contour(ig, t, r, tol);
            }
            std::cout << cnum(q.value) << "," << num(q.err_estimate) << "," << q.evaluations << "\n";
            return 0;
        }
        if (*chart_cmd) {
            const ChartPoint p = chart(t, r);
            nlohmann::ordered_json j = {{"t", p.t},           {"r", p.r},
                                        {"rho", p.rho},       {"tau", p.tau},
                                        {"s", p.s},           {"bdf_kf", p.bdf_kf},
                                        {"bdf_parF", p.bdf_parF}, {"bdf_dilF", p.bdf_dilF},
                                        {"bdf_nf", p.bdf_nf}, {"bdf_Sigma", p.bdf_sigma},
                                        {"regime", to_string(classify(p, threshold))}};
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (*expand) {
            ExpansionRequest rq{profile_by_name(profile), parse_sign(sign_text), face == "corner" ? Face::kf : parse_face(face), order};
            if (!indexset.empty()) {
                const IndexSet allowed = IndexSet::parse(indexset);
                std::vector<PhgTerm> kept;
                for (const auto& term : rq.profile.sigma_expansion.terms())
                    if (allowed.contains({term.j, term.k})) kept.push_back(term);
                rq.profile.sigma_expansion = PhgSeries(kept, rq.profile.sigma_expansion.remainder_order(),
                                                       rq.profile.sigma_expansion.variable());
            }
            const OscIntegrand ig = make_integrand(rq.profile, rq.sign);
            cplx pred, ref;
            bool have_ref = false;
            std::vector<std::string> notes;
            const PhgSeries* series = &rq.profile.sigma_expansion;
            ParamPoint at{r};
            if (face == "kf") {
                auto e = kf_expansion(rq, t, r);
                pred = e.value;
                notes = e.notes;
            } else if (face == "parF") {
                auto e = parF_expansion(rq, t, r);
                pred = e.value;
                notes = e.notes;
                series = &rq.profile.r_expansion;
                at = ParamPoint{t / (r * r)};
            } else if (face == "dilF") {
                if (rq.sign != -1) throw DomainError("dilF expansion is for the minus sign");
                auto e = stationary_phase_dilf(rq, t, r / t, int(order));
                pred = e.value;
                notes = e.notes;
                if (compare) {
                    ref = stationary_split(rq, t, r).stat.value;
                    have_ref = true;
                }
            } else {
                auto c = corner_kf_expansion(rq.profile, rq.sign, t / (r * r), r, order);
                pred = c.value;
                series = &rq.profile.corner_expansion;
            }
            if (compare && !have_ref) ref = quad_panels(ig, t, r, 1e-12).value;
            std::cout << "prediction " << cnum(pred) << "\n";
            if (compare) {
                const double abs_err = std::abs(pred - ref);
                std::cout << "oracle " << cnum(ref) << "\nabs_err " << num(abs_err) << "\nrel_err "
                          << num(abs_err / std::abs(ref)) << "\n";
            }
            for (const auto& n : notes) std::cout << "note " << n << "\n";
            if (!dump.empty()) {
                std::ofstream f(dump, std::ios::binary);
                if (!f) throw Error("cannot open '" + dump + "' for writing");
                write_series_csv(f, *series, at);
            }
            return 0;
        }
        if (*scan) {
            ScanSpec spec;
            spec.scenario = parse_scenario(scenario);
            spec.t_grid = Grid{log_grid ? Grid::Kind::log : Grid::Kind::linear, tmin, tmax, points};
            spec.ray = Ray::parse(ray);
            spec.output = out;
            const Table table = run_scan(spec, threads);
            emit_csv(table, out);
            std::size_t bad = table.flagged.size();
            if (spec.scenario == Scenario::gaussian_phase)
                for (const auto& row : table.rows)
                    if (row[0] <= 0.2 && row[1] <= 1e-3 && std::abs(row[2] - 1) > 0.02) ++bad;
            if (spec.scenario == Scenario::bound_state)
                for (const auto& row : table.rows)
                    if (std::abs(row[4] - std::exp(-row[1] * row[1])) > 1e-15) ++bad;
            for (const auto& row : table.rows)
                for (double v : row)
                    if (!std::isfinite(v)) ++bad;
            std::cout << table.rows.size() << " rows written to " << out << ", " << bad << " failing\n";
            return bad ? 1 : 0;
        }
        if (*validate) {
            int failed = 0;
            acceptance::run_all([&](const acceptance::Outcome& o) {
                std::cout << acceptance::format_line(o) << std::endl;
                if (!o.pass) ++failed;
            });
            return failed ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
