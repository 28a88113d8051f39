#include "phgosc/halfline_fourier.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "phgosc/errors.hpp"
#include "phgosc/indexsets.hpp"
#include "phgosc/special_functions.hpp"

namespace phgosc {

cplx monomial_transform(const HalflineTransformRequest& req) {
    if (req.tau == 0) throw DomainError("the transform is singular at tau = 0");
    if (!(req.j.real() > -1)) throw IntegrabilityError("monomial transform needs Re j > -1");
    const int sign = req.tau > 0 ? 1 : -1;
    const double at = std::abs(req.tau);
    const double lt = std::log(at);
    cplx sum = 0.0;
    for (int kappa = 0; kappa <= req.k; ++kappa)
        sum += c_coeff({req.j, req.k, kappa, sign}) * std::pow(lt, kappa);
    return BranchPolicy::pow(at, -req.j - 1.0) * sum;
}

PhgSeries phg_fourier_expansion(const PhgSeries& input, double re_max, int sign_tau) {
    if (sign_tau != 1 && sign_tau != -1) throw DomainError("sign_tau must be +1 or -1");
    std::vector<cplx> exps;
    for (const auto& t : input.terms()) {
        if (!(t.j.real() > -1)) throw IntegrabilityError("input exponent with Re j <= -1");
        if (t.j.real() > re_max + kIndexTol) continue;
        bool seen = false;
        for (auto e : exps) seen = seen || same_exponent(e, t.j);
        if (!seen) exps.push_back(t.j);
    }
    std::vector<PhgTerm> out;
    for (cplx j : exps) {
        const int kmax = input.max_log_power(j);
        for (int k = 0; k <= kmax; ++k) {
            std::vector<std::pair<CoeffFn, cplx>> parts;
            for (const auto& t : input.terms()) {
                if (!same_exponent(t.j, j) || t.k < k) continue;
                parts.emplace_back(t.coeff, c_coeff({j, t.k, k, sign_tau}));
            }
            CoeffFn fn = [parts](const ParamPoint& p) {
                cplx s = 0.0;
                for (const auto& [c, w] : parts) s += c(p) * w;
                return s;
            };
            out.push_back({j + 1.0, k, fn});
        }
    }
    return PhgSeries(std::move(out), re_max + 1, "1/|tau|");
}

cplx eval_fourier_expansion(const PhgSeries& s, double tau, const ParamPoint& p) {
    if (tau == 0) throw DomainError("tau must be nonzero");
    const double at = std::abs(tau), lt = std::log(at);
    cplx sum = 0.0;
    for (const auto& t : s.terms()) sum += t.coeff(p) * BranchPolicy::pow(at, -t.j) * std::pow(lt, t.k);
    return sum;
}

QuadResult numeric_halfline_fourier(const std::function<cplx(double)>& f, double support_end, double tau,
                                    double tol, const PanelOptions& opt) {
    if (!(support_end > 0)) throw DomainError("support bound must be positive");
    PanelOptions o = opt;
    o.phase_step = std::numbers::pi / 4;
    QuadResult r = integrate_quadratic_phase(f, 0.0, tau, 0.0, support_end, tol, o);
    r.method = "halfline-panels";
    return r;
}

}  // namespace phgosc
