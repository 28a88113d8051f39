#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace phgosc {

using cplx = std::complex<double>;

// Exponents closer than this are treated as equal.
inline constexpr double kIndexTol = 1e-12;

struct IndexTerm {
    cplx j;
    int k = 0;
};

bool same_exponent(cplx a, cplx b);

// A subset of C x N given by generators; denotes {(j+n, kappa) : n in N, kappa <= k}.
// No generators means the empty set (Schwartz behaviour).
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<IndexTerm> generators);

    static IndexSet empty() { return IndexSet{}; }
    static IndexSet single(cplx j, int k) { return IndexSet{{IndexTerm{j, k}}}; }

    bool is_empty() const { return gens_.empty(); }
    const std::vector<IndexTerm>& generators() const { return gens_; }

    bool contains(const IndexTerm& t) const;
    IndexSet shift(cplx c) const;
    IndexSet scale(double c) const;
    IndexSet unite(const IndexSet& other) const;

    // Every element with Re j <= re_max, sorted by (Re j, Im j, k).
    std::vector<IndexTerm> enumerate(double re_max) const;

    // Largest k with (j, k) in the set, or -1.
    int max_log_power(cplx j) const;

    std::string to_string() const;
    static IndexSet parse(std::string_view text);

private:
    std::vector<IndexTerm> gens_;
};

inline IndexSet shift(const IndexSet& s, cplx c) { return s.shift(c); }
inline IndexSet scale(const IndexSet& s, double c) { return s.scale(c); }
inline IndexSet unite(const IndexSet& a, const IndexSet& b) { return a.unite(b); }
inline std::vector<IndexTerm> enumerate(const IndexSet& s, double re_max) { return s.enumerate(re_max); }

bool operator==(const IndexTerm& a, const IndexTerm& b);

}  // namespace phgosc
