#include "polytile/tiling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polytile {

std::optional<ValuationProfile> valuation_profile(const IntegerSet& s) {
    auto pp = as_prime_power(static_cast<Int>(s.size()));
    if (!pp) return std::nullopt;
    std::set<int> vals;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            vals.insert(padic_valuation(s.elements[j] - s.elements[i], pp->prime));
    ValuationProfile out;
    out.prime = pp->prime;
    out.exponent = pp->exponent;
    out.distinct_valuations.assign(vals.begin(), vals.end());
    return out;
}

bool newman_tiles(const IntegerSet& s) {
    auto profile = valuation_profile(s);
    if (!profile) throw std::invalid_argument("newman_tiles: cardinality is not a prime power");
    return static_cast<int>(profile->distinct_valuations.size()) <= profile->exponent;
}

bool verify_tiling(const IntegerSet& s, const TilingWitness& w) {
    Int n = w.modulus;
    if (n < 1) return false;
    if (static_cast<Int>(s.size()) * static_cast<Int>(w.residues.size()) != n) return false;
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (Int t : w.residues) {
        if (t < 0 || t >= n) return false;
        for (Int x : s.elements) {
            auto pos = static_cast<std::size_t>(mod_floor(x + t, n));
            if (covered[pos]) return false;
            covered[pos] = 1;
        }
    }
    return true;  // counts match and no double cover => every residue hit
}

Int default_tiling_bound(const IntegerSet& s) {
    Int k = static_cast<Int>(s.size());
    return std::max(4 * s.diameter() * k, k);
}

namespace {

// Exact cover of Z_n by translates of offs (distinct residues).  Places a
// translate on the least uncovered residue, branching over which element of
// offs lands there.
struct CoverSearch {
    Int n;
    const std::vector<Int>& offs;
    std::vector<char> covered;
    std::vector<Int> picked;

    CoverSearch(Int n_, const std::vector<Int>& offs_)
        : n(n_), offs(offs_), covered(static_cast<std::size_t>(n_), 0) {}

    bool run(Int scan_from) {
        Int r = scan_from;
        while (r < n && covered[static_cast<std::size_t>(r)]) ++r;
        if (r == n) return true;
        for (Int s : offs) {
            Int t = mod_floor(r - s, n);
            bool fits = true;
            std::size_t placed = 0;
            for (; placed < offs.size(); ++placed) {
                auto pos = static_cast<std::size_t>(mod_floor(offs[placed] + t, n));
                if (covered[pos]) { fits = false; break; }
                covered[pos] = 1;
            }
            if (fits) {
                picked.push_back(t);
                if (run(r + 1)) return true;
                picked.pop_back();
            }
            for (std::size_t i = 0; i < placed; ++i)
                covered[static_cast<std::size_t>(mod_floor(offs[i] + t, n))] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<TilingWitness> find_tiling_complement(const IntegerSet& s, Int n_max) {
    if (n_max <= 0) n_max = default_tiling_bound(s);
    Int k = static_cast<Int>(s.size());
    for (Int n = k; n <= n_max; n += k) {
        std::vector<Int> offs;
        offs.reserve(s.size());
        for (Int x : s.elements) offs.push_back(mod_floor(x, n));
        std::sort(offs.begin(), offs.end());
        if (std::adjacent_find(offs.begin(), offs.end()) != offs.end()) continue;  // collides mod n
        CoverSearch cs(n, offs);
        if (cs.run(0)) {
            TilingWitness w;
            w.modulus = n;
            w.residues = std::move(cs.picked);
            std::sort(w.residues.begin(), w.residues.end());
            if (!verify_tiling(s, w)) throw std::logic_error("find_tiling_complement: witness failed verification");
            return w;
        }
    }
    return std::nullopt;
}

PeriodicColoring coloring_from_tiling(const IntegerSet& s, const TilingWitness& w) {
    if (!verify_tiling(s, w)) throw std::invalid_argument("coloring_from_tiling: witness is not an exact cover");
    Int n = w.modulus;
    std::vector<int> word(static_cast<std::size_t>(n), -1);
    for (Int t : w.residues)
        for (std::size_t i = 0; i < s.size(); ++i)
            word[static_cast<std::size_t>(mod_floor(s.elements[i] + t, n))] = static_cast<int>(i);
    return PeriodicColoring(std::move(word), static_cast<int>(s.size()));
}

TilingWitness tiling_from_coloring(const IntegerSet& s, const PeriodicColoring& coloring) {
    if (coloring.num_colors != static_cast<int>(s.size()))
        throw std::invalid_argument("tiling_from_coloring: need exactly |S| colors");
    if (!verify_polychromatic(s, coloring))
        throw std::invalid_argument("tiling_from_coloring: coloring is not polychromatic for S");
    TilingWitness w;
    w.modulus = coloring.period();
    for (Int i = 0; i < coloring.period(); ++i)
        if (coloring.word[static_cast<std::size_t>(i)] == 0) w.residues.push_back(i);
    if (!verify_tiling(s, w)) throw std::logic_error("tiling_from_coloring: color class is not an exact complement");
    return w;
}

namespace {

bool subset_tiles(const IntegerSet& sub, Int n_max, bool& used_bounded_search) {
    if (sub.size() == 1) return true;
    if (as_prime_power(static_cast<Int>(sub.size()))) return newman_tiles(sub);
    used_bounded_search = true;
    Int bound = n_max > 0 ? n_max : default_tiling_bound(sub);
    return find_tiling_complement(sub, bound).has_value();
}

}  // namespace

TValue t_value(const IntegerSet& s, Int n_max) {
    std::size_t k = s.size();
    // Subsets largest-first; a found tiler is always a certificate (searched
    // witnesses are verified), so only bounded rejections taint exactness.
    bool any_bounded_rejection = false;
    for (std::size_t size = k; size >= 1; --size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<Int> xs;
            xs.reserve(size);
            for (std::size_t i : idx) xs.push_back(s.elements[i]);
            bool used_bounded = false;
            bool tiles = subset_tiles(IntegerSet(std::move(xs)), n_max, used_bounded);
            if (tiles) return TValue{static_cast<int>(size), !any_bounded_rejection};
            if (used_bounded) any_bounded_rejection = true;
            // next index combination
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == k - size + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return TValue{1, !any_bounded_rejection};  // singletons always tile
}

bool neg_set_coloring_check(const IntegerSet& s, const PeriodicColoring& coloring) {
    std::vector<Int> neg;
    neg.reserve(s.size());
    for (Int x : s.elements) neg.push_back(-x);
    return verify_polychromatic(IntegerSet(std::move(neg)), coloring);
}

}  // namespace polytile
