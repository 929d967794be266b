#pragma once

#include <optional>
#include <utility>

#include "polytile/core.hpp"

namespace polytile {

struct SearchConfig {
    int num_colors = 3;
    Int q_min = 0;            // 0: start at num_colors (the smallest feasible period)
    Int q_max = 0;            // 0: default 4 * diameter(S) + 8
    long long node_budget = 20'000'000;  // per modulus
    int parallelism = 1;      // distinct q values evaluated concurrently
    bool symmetry_breaking = true;
};

enum class SearchStatus { Found, ExhaustedRange, BudgetExceeded };

struct SearchStats {
    long long nodes = 0;
    std::vector<Int> tried;   // moduli attempted, ascending
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedRange;
    Int q = 0;                          // modulus of the witness when found
    std::optional<PeriodicColoring> witness;
    SearchStats stats;
};

/// Backtracking result for a single modulus.
struct SingleQResult {
    std::optional<PeriodicColoring> witness;
    bool budget_exceeded = false;
    long long nodes = 0;
};

/// Exhaustive DFS over colorings of Z_q (positions in natural order, missing-color
/// pruning, optional symmetry breaking: word[0] = 0 and first occurrences of colors
/// in increasing order).  Finding no witness with budget_exceeded == false is a
/// proof that no polychromatic num_colors-coloring of Z_q exists for S.
SingleQResult search_single_q(const IntegerSet& s, Int q, int num_colors, long long node_budget,
                              bool symmetry_breaking = true);

/// Scans q ascending over [q_min, q_max] until some modulus admits a polychromatic
/// coloring.  Witnesses are re-verified before being returned.  Deterministic for
/// any fixed config; with parallelism > 1 the smallest successful q still wins.
SearchOutcome search_coloring(const IntegerSet& s, const SearchConfig& config = {});

/// Largest k in [2, |S|] for which a coloring was found within the budget, with a
/// witness.  k = 2 always succeeds via two_coloring.  Requires |S| >= 2.
std::pair<int, PeriodicColoring> pnum_lower_bound(const IntegerSet& s, const SearchConfig& base = {});

/// Exact polychromatic number for |S| <= 4, by the tiling criterion:
/// p = |S| when S tiles the integers, else p = |S| - 1 (and p = 1 for singletons).
int pnum_exact_small(const IntegerSet& s);

}  // namespace polytile
