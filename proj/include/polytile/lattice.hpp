#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "polytile/core.hpp"
#include "polytile/numbers.hpp"

namespace polytile {

/// Finite set of distinct points in Z^d; points kept sorted lexicographically.
struct LatticeSet {
    int dimension = 1;
    std::vector<std::vector<Int>> points;
    LatticeSet(int dimension, std::vector<std::vector<Int>> points);
    std::size_t size() const { return points.size(); }
    bool operator==(const LatticeSet& o) const {
        return dimension == o.dimension && points == o.points;
    }
};

/// Direction (w_1, ..., w_{d-1}, 1) for projecting Z^d onto Z^{d-1}.
struct ProjectionVector {
    std::vector<Int> w;
    explicit ProjectionVector(std::vector<Int> w);
    int dimension() const { return static_cast<int>(w.size()); }
};

/// color(v) = (sum_i coefficients[i] * v[i]) mod modulus; modulus colors.
struct AffineModColoring {
    std::vector<Int> coefficients;
    Int modulus = 1;
    int color_at(const std::vector<Int>& v) const;
};

/// f_w(v) = (v_1, ..., v_{d-1}) - v_d * (w_1, ..., w_{d-1}); duplicate images
/// collapse.  Polychromatic colorings of the image lift along f_w.
LatticeSet project(const LatticeSet& s, const ProjectionVector& w);

/// Scans w_1 = 0, 1, 2, ... (other coordinates 0) for a projection with
/// |f_w(S)| = |S|; terminates because only finitely many w_1 are bad.
ProjectionVector injective_projection(const LatticeSet& s);

enum class CollinearKind { AllCollinear, ExactlyK, GeneralPosition };

struct CollinearStructure {
    CollinearKind kind = CollinearKind::GeneralPosition;
    int max_collinear = 0;
    std::vector<Int> direction;   // AllCollinear: primitive, first nonzero > 0
    std::vector<Int> parameters;  // AllCollinear: sorted line parameters, first = 0
    std::vector<std::size_t> line_indices;  // one maximal collinear subset
};

/// Largest collinear subset; for fully collinear sets also the primitive
/// direction and the integer positions along it (smallest translated to 0).
CollinearStructure collinear_structure(const LatticeSet& s);

/// Polychromatic number of a fully collinear set = that of its parameter set;
/// exact for at most four points.
int pnum_collinear(const LatticeSet& s);

LatticeSet semicross_set(int d);  // {0, e_1, ..., e_d}
LatticeSet cross_set(int d);      // {0, +-e_1, ..., +-e_d}

/// chi(v) = v_1 + 2 v_2 + ... + d v_d mod (d+1): each semicross translate
/// sees all d+1 colors, certifying the semicross tiling.
AffineModColoring semicross_coloring(int d);

/// Same linear form mod (2d+1) for the cross.
AffineModColoring cross_coloring(int d);

/// Exhaustive translate check over the periodic window [0, modulus)^d.
bool verify_polychromatic_zd(const LatticeSet& s, const AffineModColoring& coloring);

/// Requires 0 in S and |S| - 1 <= d; true iff the nonzero points are linearly
/// independent over the rationals (exact integer elimination), which implies
/// S tiles Z^d.
bool tiles_if_independent(const LatticeSet& s);

/// Tiling of Z^2 with a rectangular n1 x n2 fundamental domain: translate
/// positions listed once per domain cell class.
struct RectTiling {
    Int n1 = 1, n2 = 1;
    std::vector<std::pair<Int, Int>> residues;
};

/// Bounded exact-cover search over rectangular domains of area <= area_bound;
/// nullopt means no such tiling in the bound, not a proof of none.
std::optional<RectTiling> find_rect_tiling(const LatticeSet& s, Int area_bound);

struct ZdPnum {
    int value = 0;
    bool exact = true;
    bool tiling_unknown = false;
};

/// Polychromatic number of a 3- or 4-point set in Z^d (d >= 2).  Exact in
/// every branch except planar general position, where a failed bounded tiling
/// search reports the guaranteed lower bound 3 with tiling_unknown set.
ZdPnum pnum_zd_small(const LatticeSet& s, Int area_bound = 100);

/// Four-coloring of Z with period 2a (colors 2X + Y) giving every translate
/// of {0, a, b} at least three colors; requires a even, b odd, both positive.
PeriodicColoring alternating_block_coloring(Int a, Int b);

}  // namespace polytile
