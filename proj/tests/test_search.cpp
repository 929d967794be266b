#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "polytile/search.hpp"

using namespace polytile;

namespace {

// Exhaustive enumeration of all k^q words: is any of them polychromatic mod q?
bool brute_force_exists(const IntegerSet& s, Int q, int k) {
    std::vector<int> word(static_cast<std::size_t>(q), 0);
    while (true) {
        if (verify_polychromatic_mod(s, q, PeriodicColoring(word, k))) return true;
        std::size_t i = 0;
        while (i < word.size() && word[i] == k - 1) word[i++] = 0;
        if (i == word.size()) return false;
        ++word[i];
    }
}

}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("finds the mod-3 coloring for {0,1,5}") {
    SearchOutcome out = search_coloring({0, 1, 5});
    REQUIRE(out.status == SearchStatus::Found);
    CHECK(out.q == 3);
    REQUIRE(out.witness);
    CHECK(out.witness->word == std::vector<int>{0, 1, 2});
    CHECK(verify_polychromatic_mod({0, 1, 5}, out.q, *out.witness));
}

TEST_CASE("exhausts the range for {0,1,3} with three colors") {
    SearchConfig cfg;
    cfg.q_max = 30;
    SearchOutcome out = search_coloring({0, 1, 3}, cfg);
    CHECK(out.status == SearchStatus::ExhaustedRange);
    CHECK(!out.witness);
    CHECK(out.stats.tried.size() == 28);  // q = 3..30
}

TEST_CASE("finds a witness for {0,1,2,4}") {
    SearchOutcome out = search_coloring({0, 1, 2, 4});
    REQUIRE(out.status == SearchStatus::Found);
    REQUIRE(out.witness);
    CHECK(verify_polychromatic_mod({0, 1, 2, 4}, out.q, *out.witness));
}

TEST_CASE("tiny node budgets report budget exhaustion") {
    SearchConfig cfg;
    cfg.q_max = 20;
    cfg.node_budget = 5;
    SearchOutcome out = search_coloring({0, 1, 3}, cfg);
    CHECK(out.status == SearchStatus::BudgetExceeded);
}

TEST_CASE("single-q exhaustion agrees with brute force") {
    std::vector<IntegerSet> sets = {{0, 1, 3}, {0, 1, 5}, {0, 2, 5}, {0, 1, 2, 4}};
    for (const IntegerSet& s : sets) {
        for (Int q = 3; q <= 8; ++q) {
            SingleQResult r = search_single_q(s, q, 3, 100'000'000);
            REQUIRE(!r.budget_exceeded);
            CHECK(r.witness.has_value() == brute_force_exists(s, q, 3));
            if (r.witness) CHECK(verify_polychromatic_mod(s, q, *r.witness));
        }
    }
}

TEST_CASE("deterministic across repeated runs and worker counts") {
    SearchConfig cfg;
    SearchOutcome a = search_coloring({0, 1, 2, 4}, cfg);
    SearchOutcome b = search_coloring({0, 1, 2, 4}, cfg);
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(a.q == b.q);
    CHECK(a.witness->word == b.witness->word);
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(a.stats.tried == b.stats.tried);

    cfg.parallelism = 4;
    SearchOutcome c = search_coloring({0, 1, 2, 4}, cfg);
    REQUIRE(c.witness);
    CHECK(c.q == a.q);
    CHECK(c.witness->word == a.witness->word);
}

TEST_CASE("pnum_lower_bound") {
    auto [k137, w137] = pnum_lower_bound({0, 1, 3, 7});
    CHECK(k137 == 3);
    CHECK(verify_polychromatic({0, 1, 3, 7}, w137));

    auto [k123, w123] = pnum_lower_bound({0, 1, 2, 3});
    CHECK(k123 == 4);
    CHECK(w123.period() == 4);
    CHECK(w123.word == std::vector<int>{0, 1, 2, 3});

    auto [k01, w01] = pnum_lower_bound({0, 1});
    CHECK(k01 == 2);
    CHECK(w01.word == std::vector<int>{0, 1});
}

TEST_CASE("pnum_exact_small") {
    CHECK(pnum_exact_small({0, 1, 5}) == 3);
    CHECK(pnum_exact_small({0, 1, 3}) == 2);
    CHECK(pnum_exact_small({0, 1, 2, 4}) == 3);
    CHECK(pnum_exact_small({0, 1, 3, 7}) == 3);
    CHECK(pnum_exact_small({0, 1, 2, 3}) == 4);
    CHECK(pnum_exact_small({0}) == 1);
    CHECK(pnum_exact_small({0, 7}) == 2);
    CHECK_THROWS_AS(pnum_exact_small({0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("exact values agree with search lower bounds on small quads") {
    std::vector<IntegerSet> sets = {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4},
                                    {0, 1, 2, 5}, {0, 1, 3, 7}};
    for (const IntegerSet& s : sets) {
        auto [k_best, witness] = pnum_lower_bound(s);
        CHECK(k_best == pnum_exact_small(s));
        CHECK(verify_polychromatic(s, witness));
    }
}

TEST_SUITE_END();
