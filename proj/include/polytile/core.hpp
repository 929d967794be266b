#pragma once

#include <vector>

#include "polytile/numbers.hpp"

namespace polytile {

/// Finite nonempty set of integers, kept sorted and duplicate-free.
struct IntegerSet {
    std::vector<Int> elements;

    IntegerSet() = default;
    explicit IntegerSet(std::vector<Int> xs);
    IntegerSet(std::initializer_list<Int> xs);

    std::size_t size() const { return elements.size(); }
    Int min() const { return elements.front(); }
    Int max() const { return elements.back(); }
    Int diameter() const { return max() - min(); }

    bool operator==(const IntegerSet& o) const { return elements == o.elements; }
};

/// Result of normalizing a set to min 0 and content gcd 1:
/// original = { scale * x + shift : x in elements }.
struct CanonicalSet {
    IntegerSet set;
    Int scale = 1;
    Int shift = 0;
};

/// Coloring of Z (or of Z_m) by the periodic repetition of `word`.
/// Entries lie in [0, num_colors).
struct PeriodicColoring {
    std::vector<int> word;
    int num_colors = 1;

    PeriodicColoring() = default;
    PeriodicColoring(std::vector<int> w, int k);

    Int period() const { return static_cast<Int>(word.size()); }
    int color_at(Int n) const { return word[static_cast<std::size_t>(mod_floor(n, period()))]; }
};

/// Translate to min 0, then divide by the gcd of the nonzero elements.
CanonicalSet canonicalize(const IntegerSet& s);

/// True iff every translate n + S, n in Z, contains all num_colors colors
/// under the periodic coloring.  One period of window positions suffices.
bool verify_polychromatic(const IntegerSet& s, const PeriodicColoring& coloring);

/// Same check for translates of (S mod q) inside Z_q; the coloring period must equal q.
bool verify_polychromatic_mod(const IntegerSet& s, Int q, const PeriodicColoring& coloring);

/// Image of S + t reduced mod m.  Collisions collapse (the result may be smaller).
IntegerSet translate_equivalent(const IntegerSet& s, Int t, Int m);

/// Image of k*S reduced mod q; requires gcd(k, q) = 1.
/// If a coloring chi is polychromatic for the image, chi(k^{-1} n mod q) is
/// polychromatic for S.
IntegerSet unit_multiply(const IntegerSet& s, Int k, Int q);

/// Blocks of length diameter(S) alternating between two colors:
/// color(n) = floor(n / diameter) mod 2, period 2 * diameter.
/// Every translate of S is bichromatic because min and max of a translate
/// fall in adjacent blocks.  Requires |S| >= 2.
PeriodicColoring two_coloring(const IntegerSet& s);

/// Fraction of Z occupied by one color class, as an exact rational.
Rational color_class_density(const PeriodicColoring& coloring, int color);

}  // namespace polytile
