#pragma once

#include <optional>

#include "polytile/core.hpp"

namespace polytile {

/// Certificate that S + T + nZ partitions Z: the cover is exact in Z_n.
struct TilingWitness {
    Int modulus = 1;
    std::vector<Int> residues;  // sorted, in [0, modulus)
};

/// p-adic valuations of the pairwise differences of S, for |S| = p^alpha.
struct ValuationProfile {
    Int prime = 0;
    int exponent = 0;
    std::vector<int> distinct_valuations;  // sorted
};

/// nullopt when |S| is not a prime power (alpha >= 1).
std::optional<ValuationProfile> valuation_profile(const IntegerSet& s);

/// Tiling criterion for prime-power cardinality: S tiles Z iff the number of
/// distinct p-adic valuations among pairwise differences is at most alpha.
/// Throws std::invalid_argument when |S| is not a prime power.
bool newman_tiles(const IntegerSet& s);

/// Checks that translates of S at the residues cover Z_n exactly once each.
bool verify_tiling(const IntegerSet& s, const TilingWitness& w);

/// 4 * diameter * |S| (at least |S|): the modulus range scanned by default.
Int default_tiling_bound(const IntegerSet& s);

/// Smallest modulus n <= n_max (n a multiple of |S|) admitting an exact cover
/// of Z_n by translates of S, found by depth-first search placing translates
/// at the least uncovered residue.  An exact cover mod n lifts to a tiling of
/// Z with period n.  Absence within n_max is NOT a proof that S does not tile.
std::optional<TilingWitness> find_tiling_complement(const IntegerSet& s, Int n_max = 0);

/// chi(s_i + t) = i for t in T: an |S|-coloring of Z_n, polychromatic for S.
PeriodicColoring coloring_from_tiling(const IntegerSet& s, const TilingWitness& w);

/// The positions of color 0 in one period form a tiling complement of S
/// (every |S|-color polychromatic coloring is also (-S)-polychromatic, which
/// makes each class an exact complement).  Requires a polychromatic coloring
/// with exactly |S| colors.
TilingWitness tiling_from_coloring(const IntegerSet& s, const PeriodicColoring& coloring);

struct TValue {
    int value = 1;
    bool exact = true;
};

/// Largest cardinality of a subset of S that tiles the integers.  Exact for
/// |S| <= 4 (all subset sizes decided by the prime-power criterion); larger
/// sets fall back to the bounded complement search for non-prime-power sizes
/// and report exact = false when such a bounded rejection influenced the answer.
TValue t_value(const IntegerSet& s, Int n_max = 0);

/// True iff the coloring is polychromatic for -S.
bool neg_set_coloring_check(const IntegerSet& s, const PeriodicColoring& coloring);

}  // namespace polytile
