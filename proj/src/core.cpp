#include "polytile/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace polytile {

IntegerSet::IntegerSet(std::vector<Int> xs) : elements(std::move(xs)) {
    if (elements.empty()) throw std::invalid_argument("IntegerSet: empty");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

IntegerSet::IntegerSet(std::initializer_list<Int> xs) : IntegerSet(std::vector<Int>(xs)) {}

PeriodicColoring::PeriodicColoring(std::vector<int> w, int k) : word(std::move(w)), num_colors(k) {
    if (word.empty()) throw std::invalid_argument("PeriodicColoring: empty word");
    if (num_colors < 1) throw std::invalid_argument("PeriodicColoring: need at least one color");
    for (int c : word)
        if (c < 0 || c >= num_colors)
            throw std::invalid_argument("PeriodicColoring: color out of range");
}

CanonicalSet canonicalize(const IntegerSet& s) {
    Int shift = s.min();
    std::vector<Int> shifted;
    shifted.reserve(s.size());
    for (Int x : s.elements) shifted.push_back(x - shift);
    Int g = gcd_all(shifted);
    if (g == 0) g = 1;  // singleton {0}
    for (Int& x : shifted) x /= g;
    return CanonicalSet{IntegerSet(std::move(shifted)), g, shift};
}

bool verify_polychromatic(const IntegerSet& s, const PeriodicColoring& coloring) {
    Int m = coloring.period();
    int k = coloring.num_colors;
    if (static_cast<std::size_t>(k) > s.size()) return false;
    for (Int n = 0; n < m; ++n) {
        unsigned seen = 0;
        for (Int x : s.elements) seen |= 1u << coloring.color_at(n + x);
        if (seen != (k >= 32 ? ~0u : (1u << k) - 1)) return false;
    }
    return true;
}

bool verify_polychromatic_mod(const IntegerSet& s, Int q, const PeriodicColoring& coloring) {
    if (q < 1) throw std::invalid_argument("verify_polychromatic_mod: modulus must be positive");
    if (coloring.period() != q)
        throw std::invalid_argument("verify_polychromatic_mod: coloring period differs from modulus");
    // Windows {(n + x) mod q : x in S} coincide with windows of (S mod q) in Z_q.
    return verify_polychromatic(s, coloring);
}

IntegerSet translate_equivalent(const IntegerSet& s, Int t, Int m) {
    if (m < 1) throw std::invalid_argument("translate_equivalent: modulus must be positive");
    std::vector<Int> out;
    out.reserve(s.size());
    for (Int x : s.elements) out.push_back(mod_floor(x + t, m));
    return IntegerSet(std::move(out));
}

IntegerSet unit_multiply(const IntegerSet& s, Int k, Int q) {
    if (q < 1) throw std::invalid_argument("unit_multiply: modulus must be positive");
    if (extended_gcd(mod_floor(k, q), q).g != 1)
        throw std::invalid_argument("unit_multiply: multiplier not a unit mod q");
    std::vector<Int> out;
    out.reserve(s.size());
    for (Int x : s.elements) out.push_back(mod_floor(k * x, q));
    return IntegerSet(std::move(out));
}

PeriodicColoring two_coloring(const IntegerSet& s) {
    if (s.size() < 2) throw std::invalid_argument("two_coloring: need at least two elements");
    Int d = s.diameter();
    std::vector<int> word(static_cast<std::size_t>(2 * d));
    for (Int n = 0; n < 2 * d; ++n) word[static_cast<std::size_t>(n)] = static_cast<int>(n / d);
    return PeriodicColoring(std::move(word), 2);
}

Rational color_class_density(const PeriodicColoring& coloring, int color) {
    if (color < 0 || color >= coloring.num_colors)
        throw std::invalid_argument("color_class_density: color out of range");
    Int count = 0;
    for (int c : coloring.word)
        if (c == color) ++count;
    return Rational(count, coloring.period());
}

}  // namespace polytile
