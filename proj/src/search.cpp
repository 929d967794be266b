#include "polytile/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "polytile/tiling.hpp"

namespace polytile {

namespace {

// Backtracking over word positions 0..q-1 in natural order.  Window w consists
// of positions (w + off) mod q; a window missing more colors than it has
// unassigned positions prunes the branch.
struct QSearcher {
    Int q;
    int k;
    long long budget;
    bool sym;
    std::size_t n, sz;
    std::vector<int> windows_of;  // n * sz window indices per position
    std::vector<int> cnt;         // per window, per color: assigned members with that color
    std::vector<int> assigned;    // per window
    std::vector<int> present;     // per window: distinct colors present
    std::vector<int> word;
    long long nodes = 0;
    bool aborted = false;

    QSearcher(const IntegerSet& s, Int q_, int k_, long long budget_, bool sym_)
        : q(q_), k(k_), budget(budget_), sym(sym_) {
        n = static_cast<std::size_t>(q);
        std::vector<Int> offs;
        for (Int x : s.elements) offs.push_back(mod_floor(x, q));
        std::sort(offs.begin(), offs.end());
        offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
        sz = offs.size();
        windows_of.resize(n * sz);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t i = 0; i < sz; ++i)
                windows_of[p * sz + i] = static_cast<int>(mod_floor(static_cast<Int>(p) - offs[i], q));
        cnt.assign(n * static_cast<std::size_t>(k), 0);
        assigned.assign(n, 0);
        present.assign(n, 0);
        word.assign(n, -1);
    }

    bool dfs(std::size_t p, int max_used) {
        if (p == n) return true;
        int cmax = sym ? std::min(k - 1, max_used + 1) : k - 1;
        const int* wptr = &windows_of[p * sz];
        for (int c = 0; c <= cmax; ++c) {
            if (++nodes > budget) {
                aborted = true;
                return false;
            }
            bool ok = true;
            std::size_t done = 0;
            while (done < sz) {
                int w = wptr[done];
                int& cc = cnt[static_cast<std::size_t>(w) * k + c];
                if (cc++ == 0) ++present[w];
                ++assigned[w];
                ++done;
                if (k - present[w] > static_cast<int>(sz) - assigned[w]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                word[p] = c;
                if (dfs(p + 1, std::max(max_used, c))) return true;
                word[p] = -1;
            }
            for (std::size_t i = 0; i < done; ++i) {
                int w = wptr[i];
                int& cc = cnt[static_cast<std::size_t>(w) * k + c];
                if (--cc == 0) --present[w];
                --assigned[w];
            }
            if (aborted) return false;
        }
        return false;
    }
};

SingleQResult run_single(const IntegerSet& s, Int q, int k, long long budget, bool sym) {
    SingleQResult out;
    // Windows have one position per distinct residue of S mod q; fewer distinct
    // residues than colors makes every window fail outright.
    std::vector<Int> offs;
    for (Int x : s.elements) offs.push_back(mod_floor(x, q));
    std::sort(offs.begin(), offs.end());
    offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
    if (static_cast<int>(offs.size()) < k) return out;
    QSearcher qs(s, q, k, budget, sym);
    bool found = qs.dfs(0, -1);
    out.nodes = qs.nodes;
    out.budget_exceeded = qs.aborted;
    if (found) out.witness = PeriodicColoring(qs.word, k);
    return out;
}

}  // namespace

SingleQResult search_single_q(const IntegerSet& s, Int q, int num_colors, long long node_budget,
                              bool symmetry_breaking) {
    if (q < 1) throw std::invalid_argument("search_single_q: modulus must be positive");
    if (num_colors < 1) throw std::invalid_argument("search_single_q: need at least one color");
    return run_single(s, q, num_colors, node_budget, symmetry_breaking);
}

SearchOutcome search_coloring(const IntegerSet& s, const SearchConfig& config) {
    if (config.num_colors < 1) throw std::invalid_argument("search_coloring: need at least one color");
    Int diam = s.diameter();
    // A period below the color count can never host k colors, so the schedule
    // starts there; periods below the diameter stay in — reduction mod q can
    // keep all window positions distinct (e.g. {0,1,5} has a period-3 witness)
    // and collapsed windows fail instantly, so trying them is nearly free.
    Int q_lo = std::max<Int>(config.q_min > 0 ? config.q_min : 1, config.num_colors);
    Int q_hi = config.q_max > 0 ? config.q_max : 4 * diam + 8;
    int jobs = std::max(1, config.parallelism);

    SearchOutcome out;
    bool any_budget = false;
    for (Int q = q_lo; q <= q_hi;) {
        Int chunk_end = std::min(q_hi, q + jobs - 1);
        std::vector<SingleQResult> results(static_cast<std::size_t>(chunk_end - q + 1));
        if (jobs == 1) {
            results[0] = run_single(s, q, config.num_colors, config.node_budget, config.symmetry_breaking);
        } else {
            std::vector<std::thread> threads;
            for (Int qq = q; qq <= chunk_end; ++qq) {
                threads.emplace_back([&, qq] {
                    results[static_cast<std::size_t>(qq - q)] =
                        run_single(s, qq, config.num_colors, config.node_budget, config.symmetry_breaking);
                });
            }
            for (auto& t : threads) t.join();
        }
        for (Int qq = q; qq <= chunk_end; ++qq) {
            auto& r = results[static_cast<std::size_t>(qq - q)];
            out.stats.tried.push_back(qq);
            out.stats.nodes += r.nodes;
            any_budget = any_budget || r.budget_exceeded;
            if (r.witness) {
                if (!verify_polychromatic_mod(s, qq, *r.witness))
                    throw std::logic_error("search_coloring: witness failed verification");
                out.status = SearchStatus::Found;
                out.q = qq;
                out.witness = std::move(r.witness);
                return out;
            }
        }
        q = chunk_end + 1;
    }
    out.status = any_budget ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedRange;
    return out;
}

std::pair<int, PeriodicColoring> pnum_lower_bound(const IntegerSet& s, const SearchConfig& base) {
    if (s.size() < 2) throw std::invalid_argument("pnum_lower_bound: need at least two elements");
    int best_k = 2;
    PeriodicColoring best = two_coloring(s);
    for (int k = 3; k <= static_cast<int>(s.size()); ++k) {
        SearchConfig cfg = base;
        cfg.num_colors = k;
        SearchOutcome out = search_coloring(s, cfg);
        if (out.status != SearchStatus::Found) break;
        best_k = k;
        best = *out.witness;
    }
    return {best_k, best};
}

int pnum_exact_small(const IntegerSet& s) {
    if (s.size() == 1) return 1;
    if (s.size() > 4) throw std::invalid_argument("pnum_exact_small: only |S| <= 4 is decided exactly");
    return newman_tiles(s) ? static_cast<int>(s.size()) : static_cast<int>(s.size()) - 1;
}

}  // namespace polytile
