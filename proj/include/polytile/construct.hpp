#pragma once

#include <array>
#include <optional>
#include <string>

#include "polytile/core.hpp"

namespace polytile {

/// Canonical quad {0, a, b, c} together with the working modulus m = c - a + b
/// and the two axis gcds d1 = gcd(b, m), d2 = gcd(b - a, m).  For gcd-1 quads
/// d1 and d2 are coprime.  Mod m the quad is a translate of {0, b-a, b, 2b-a}.
struct ReducedQuad {
    Int a = 0, b = 0, c = 0;
    Int m = 0, d1 = 0, d2 = 0;
    static ReducedQuad from(const IntegerSet& canonical);
};

enum class CaseKind { Small, C1a, C1b, C1c, C1d, C2a, C2b, C2c, C2d };

const char* case_name(CaseKind k);

/// Which branch built the coloring, plus the parameters that drove dispatch.
struct CaseTag {
    CaseKind kind = CaseKind::Small;
    bool axis_swapped = false;  // roles of b and b-a exchanged
    bool reflected = false;     // g replaced by m - g
    Int q = 0;                  // witness modulus (Small only)
    Int g = 0, s = 0;           // single-cycle parameters
    Int e1 = 0, u = 0, v = 0, w = 0;  // multi-cycle parameters
};

/// A length-r word and its length-(r+1) variant; every concatenation of such
/// blocks, read cyclically, is polychromatic for base_set.
struct BlockTemplate {
    IntegerSet base_set;
    int r;
    std::string word_r;
    std::string word_r1;
};
const std::vector<BlockTemplate>& block_templates();

/// h blocks of length r plus j blocks of length r+1 with h*r + j*(r+1) = m,
/// h, j >= 0.  Deterministic choice: j = m mod r.  Exists whenever
/// m > r^2 - r - 1; nullopt otherwise.
std::optional<std::pair<Int, Int>> frobenius_decompose(Int m, Int r);

/// Concatenates the Frobenius mix of blocks into an m-periodic 3-coloring.
PeriodicColoring table_coloring(const BlockTemplate& row, Int m);

/// g in [2, m-2] with step * g = other (mod m), where step is the axis element
/// coprime to m (b, or b-a when swapped); reflected to g <= m/2.
Int single_cycle_g(const ReducedQuad& quad, bool axis_swapped);

/// Smallest multiple of 3 with g > ceil(m / s).  Requires g >= 2.
Int interval_count(Int g, Int m);

/// Case analysis for c >= 289; every quad lands in exactly one subcase.
CaseTag dispatch_case(const ReducedQuad& quad);

/// Subcase colorings of Z_m for the working set {0, 1, g, g+1}.
PeriodicColoring subcase_1b_coloring(Int g, Int m, Int s);
PeriodicColoring subcase_1c_coloring(Int g, Int m);
PeriodicColoring subcase_1d_coloring(Int g, Int m);

/// Cycles C_i = { i*A + j*B mod m : 0 <= j < e1 }, i in [0, d1), partitioning
/// Z_m; B has gcd(B, m) = d1, e1 = m / d1, and gcd(A, d1) = 1.  Adding A steps
/// from C_i to C_{i+1}; adding B steps along a cycle.
struct CycleDecomposition {
    Int m = 0, d1 = 0, e1 = 0, A = 0, B = 0;
    Int at(Int i, Int j) const { return mod_floor(i * A + j * B, m); }
    /// Column shift rho with d1 * A = rho * B (mod m): stepping off the last
    /// cycle lands on cycle 0 shifted by rho columns.
    Int wrap_offset() const;
};

/// e1 = u + v + w, all odd, u >= v >= w >= u - 2.  Requires e1 >= 19 odd.
std::array<Int, 3> odd_triple_decompose(Int e1);

/// Rotations r_1..r_{d1-1}, each in [u, e1-u], whose total T satisfies
/// (T + wrap_offset) mod e1 in [u, e1-u] so the closing pair of cycles also
/// sees a valid rotation.  Greedy: all start at u, bump until the total fits.
std::vector<Int> rotation_schedule(Int d1, Int e1, Int u, Int wrap_offset = 0);

/// Colors Z_m cycle by cycle for the four multi-cycle subcases.
PeriodicColoring multi_cycle_coloring(const CycleDecomposition& cyc, CaseKind kind);

struct Construction {
    PeriodicColoring coloring;
    CaseTag tag;
    CanonicalSet canonical;
};

/// 3-coloring of Z polychromatic for the 4-element set S: exhaustive modulus
/// search below canonical diameter 289, case construction at or above it.
/// The coloring is verified against S before being returned; verification
/// failure is a hard error, never silently rerouted.
Construction construct_3coloring(const IntegerSet& s);

}  // namespace polytile
