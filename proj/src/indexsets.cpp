#include "phgosc/indexsets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "phgosc/errors.hpp"

namespace phgosc {

namespace {

// True if d is (numerically) a nonnegative integer.
bool natural_offset(cplx d) {
    if (std::abs(d.imag()) > kIndexTol) return false;
    double n = std::round(d.real());
    return n >= 0 && std::abs(d.real() - n) <= kIndexTol * std::max(1.0, std::abs(d.real()));
}

bool dominated(const IndexTerm& t, const IndexTerm& by) {
    return natural_offset(t.j - by.j) && t.k <= by.k;
}

bool term_less(const IndexTerm& a, const IndexTerm& b) {
    if (!same_exponent(a.j, b.j)) {
        if (std::abs(a.j.real() - b.j.real()) > kIndexTol) return a.j.real() < b.j.real();
        return a.j.imag() < b.j.imag();
    }
    return a.k < b.k;
}

std::vector<IndexTerm> minimalize(std::vector<IndexTerm> in) {
    std::sort(in.begin(), in.end(), term_less);
    std::vector<IndexTerm> out;
    for (std::size_t a = 0; a < in.size(); ++a) {
        bool drop = false;
        for (std::size_t b = 0; b < in.size() && !drop; ++b) {
            if (a == b) continue;
            if (dominated(in[a], in[b])) {
                // Equal terms: keep the first copy only.
                bool equal = same_exponent(in[a].j, in[b].j) && in[a].k == in[b].k;
                drop = !equal || b < a;
            }
        }
        if (!drop) out.push_back(in[a]);
    }
    return out;
}

std::string format_exponent(cplx j) {
    char buf[96];
    if (std::abs(j.imag()) <= kIndexTol)
        std::snprintf(buf, sizeof buf, "%.15g", j.real());
    else
        std::snprintf(buf, sizeof buf, "%.15g%+.15gi", j.real(), j.imag());
    return buf;
}

double parse_real(std::string_view s) {
    std::string str(s);
    auto slash = str.find('/');
    std::size_t used = 0;
    try {
        if (slash != std::string::npos) {
            double num = std::stod(str.substr(0, slash), &used);
            if (used != slash) throw DomainError("bad number");
            std::string den_s = str.substr(slash + 1);
            double den = std::stod(den_s, &used);
            if (used != den_s.size() || den == 0) throw DomainError("bad number");
            return num / den;
        }
        double v = std::stod(str, &used);
        if (used != str.size()) throw DomainError("bad number");
        return v;
    } catch (const std::logic_error&) {
        throw DomainError("cannot parse exponent '" + str + "'");
    }
}

cplx parse_exponent(std::string_view s) {
    if (!s.empty() && s.back() == 'i') {
        // re+imi or re-imi; the sign search skips a leading sign and exponent signs.
        std::string str(s.substr(0, s.size() - 1));
        for (std::size_t p = str.size(); p-- > 1;) {
            if ((str[p] == '+' || str[p] == '-') && str[p - 1] != 'e' && str[p - 1] != 'E')
                return {parse_real(str.substr(0, p)), parse_real(str.substr(p))};
        }
        return {0.0, parse_real(str)};
    }
    return {parse_real(s), 0.0};
}

}  // namespace

bool same_exponent(cplx a, cplx b) {
    return std::abs(a - b) <= kIndexTol * std::max(1.0, std::abs(a));
}

bool operator==(const IndexTerm& a, const IndexTerm& b) {
    return same_exponent(a.j, b.j) && a.k == b.k;
}

IndexSet::IndexSet(std::vector<IndexTerm> generators) {
    for (const auto& g : generators) {
        if (g.k < 0) throw DomainError("log power must be nonnegative");
        if (!std::isfinite(g.j.real()) || !std::isfinite(g.j.imag()))
            throw DomainError("exponent must be finite");
    }
    gens_ = minimalize(std::move(generators));
}

bool IndexSet::contains(const IndexTerm& t) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const IndexTerm& g) { return dominated(t, g); });
}

int IndexSet::max_log_power(cplx j) const {
    int best = -1;
    for (const auto& g : gens_)
        if (natural_offset(j - g.j)) best = std::max(best, g.k);
    return best;
}

IndexSet IndexSet::shift(cplx c) const {
    std::vector<IndexTerm> g = gens_;
    for (auto& t : g) t.j += c;
    return IndexSet(std::move(g));
}

IndexSet IndexSet::scale(double c) const {
    if (!(c > 0)) throw DomainError("scale factor must be positive");
    // Scaled closure {(c(j+n), kappa)}: its minimal elements are c(j+n) for n below
    // the first n with c*n a positive integer; later ones are dominated.
    constexpr int kMaxDenominator = 1000;
    int period = 0;
    for (int n = 1; n <= kMaxDenominator; ++n) {
        if (natural_offset(cplx(c * n, 0.0))) {
            period = n;
            break;
        }
    }
    if (period == 0) throw Unsupported("scale factor is not rational with a small denominator");
    std::vector<IndexTerm> g;
    for (const auto& t : gens_)
        for (int n = 0; n < period; ++n) g.push_back({c * (t.j + double(n)), t.k});
    return IndexSet(std::move(g));
}

IndexSet IndexSet::unite(const IndexSet& other) const {
    std::vector<IndexTerm> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return IndexSet(std::move(g));
}

std::vector<IndexTerm> IndexSet::enumerate(double re_max) const {
    std::vector<IndexTerm> tops;  // (exponent, max k)
    for (const auto& g : gens_) {
        for (int n = 0; g.j.real() + n <= re_max + kIndexTol; ++n) {
            cplx j = g.j + double(n);
            auto it = std::find_if(tops.begin(), tops.end(),
                                   [&](const IndexTerm& t) { return same_exponent(t.j, j); });
            if (it == tops.end())
                tops.push_back({j, g.k});
            else
                it->k = std::max(it->k, g.k);
        }
    }
    std::vector<IndexTerm> out;
    for (const auto& t : tops)
        for (int kappa = 0; kappa <= t.k; ++kappa) out.push_back({t.j, kappa});
    std::sort(out.begin(), out.end(), term_less);
    return out;
}

std::string IndexSet::to_string() const {
    if (gens_.empty()) return "EMPTY";
    std::string s;
    for (const auto& g : gens_) {
        if (!s.empty()) s += ',';
        s += format_exponent(g.j) + ':' + std::to_string(g.k);
    }
    return s;
}

IndexSet IndexSet::parse(std::string_view text) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text == "EMPTY") return IndexSet{};
    if (text.empty()) throw DomainError("empty index-set text");
    std::vector<IndexTerm> g;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        auto colon = item.rfind(':');
        if (colon == std::string_view::npos) throw DomainError("index term needs 'j:k'");
        double kd = parse_real(trim(item.substr(colon + 1)));
        if (kd < 0 || kd != std::floor(kd)) throw DomainError("log power must be a nonnegative integer");
        g.push_back({parse_exponent(trim(item.substr(0, colon))), static_cast<int>(kd)});
    }
    return IndexSet(std::move(g));
}

}  // namespace phgosc
