#pragma once

#include "polytile/core.hpp"
#include "polytile/numbers.hpp"

namespace polytile {

/// Residue set T ⊆ [0, n), representing the periodic set {x : x mod n ∈ T}.
struct PeriodicSet {
    Int modulus = 1;
    std::vector<Int> residues;  // sorted, distinct, in [0, modulus)

    PeriodicSet() = default;
    PeriodicSet(Int modulus, std::vector<Int> residues);
    Rational density() const;
    bool operator==(const PeriodicSet& o) const {
        return modulus == o.modulus && residues == o.residues;
    }
};

/// True iff every translate of S meets T; one modulus period is checked.
bool verify_blocking(const IntegerSet& s, const PeriodicSet& t);

/// True iff S + T covers every residue class mod n (multiple hits allowed).
bool verify_complement(const IntegerSet& s, const PeriodicSet& t);

/// The color class of minimum density (ties: lowest color index), which blocks
/// S when the coloring is polychromatic for S; density ≤ 1/num_colors.
PeriodicSet blocking_set_from_coloring(const IntegerSet& s, const PeriodicColoring& coloring);

/// Negates the residues mod n: T blocks S exactly when -T covers with S.
PeriodicSet complement_from_blocking(const PeriodicSet& t);

struct CodensityBound {
    Rational density;
    PeriodicSet complement;
};

/// Upper bound on the covering codensity of S: builds the best available
/// polychromatic coloring (tiling complement, the four-element construction,
/// a two-coloring, or search), takes the min-density class, and negates it
/// into a verified complement.  Exact rational density of the witness.
CodensityBound codensity_upper_bound(const IntegerSet& s);

}  // namespace polytile
