#include "phgosc/phg_series.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "phgosc/errors.hpp"
#include "phgosc/indexsets.hpp"
#include "phgosc/special_functions.hpp"

namespace phgosc {

CoeffFn constant_coeff(cplx c) {
    return [c](const ParamPoint&) { return c; };
}

PhgSeries::PhgSeries(std::vector<PhgTerm> terms, double remainder_order, std::string variable)
    : terms_(std::move(terms)), remainder_(remainder_order), variable_(std::move(variable)) {
    for (std::size_t a = 0; a < terms_.size(); ++a) {
        if (terms_[a].k < 0) throw DomainError("log power must be nonnegative");
        if (!terms_[a].coeff) throw DomainError("term without coefficient");
        if (std::isfinite(remainder_) && terms_[a].j.real() > remainder_ + kIndexTol)
            throw DomainError("term exponent above remainder order");
        for (std::size_t b = 0; b < a; ++b)
            if (same_exponent(terms_[a].j, terms_[b].j) && terms_[a].k == terms_[b].k)
                throw DomainError("duplicate term key");
    }
}

cplx PhgSeries::coefficient(cplx j, int k, const ParamPoint& p) const {
    for (const auto& t : terms_)
        if (t.k == k && same_exponent(t.j, j)) return t.coeff(p);
    return 0.0;
}

int PhgSeries::max_log_power(cplx j) const {
    int best = -1;
    for (const auto& t : terms_)
        if (same_exponent(t.j, j)) best = std::max(best, t.k);
    return best;
}

PhgSeries truncate(const PhgSeries& s, double gamma) {
    if (gamma > s.remainder_order() + kIndexTol)
        throw InvalidTruncation("truncation order exceeds the remainder order");
    std::vector<PhgTerm> kept;
    for (const auto& t : s.terms())
        if (t.j.real() <= gamma + kIndexTol) kept.push_back(t);
    return PhgSeries(std::move(kept), gamma, s.variable());
}

cplx eval_series(const PhgSeries& s, double x, const ParamPoint& p) {
    if (!(x > 0) || !std::isfinite(x)) throw DomainError("series variable must be positive");
    const double lx = std::log(x);
    cplx sum = 0.0;
    for (const auto& t : s.terms())
        sum += t.coeff(p) * BranchPolicy::pow(x, t.j) * std::pow(lx, t.k);
    return sum;
}

PhgSeries monomial_multiply(const PhgSeries& s, cplx j0, int k0) {
    if (k0 != 0) throw Unsupported("log-power multiplication is not supported");
    std::vector<PhgTerm> out = s.terms();
    for (auto& t : out) t.j += j0;
    double rem = s.remainder_order();
    if (std::isfinite(rem)) rem += j0.real();
    return PhgSeries(std::move(out), rem, s.variable());
}

void write_series_csv(std::ostream& os, const PhgSeries& s, const ParamPoint& p) {
    os << "re_j,im_j,k,re_coeff,im_coeff\n";
    char buf[160];
    for (const auto& t : s.terms()) {
        cplx c = t.coeff(p);
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%d,%.15g,%.15g\n", t.j.real(), t.j.imag(), t.k,
                      c.real(), c.imag());
        os << buf;
    }
}

}  // namespace phgosc
