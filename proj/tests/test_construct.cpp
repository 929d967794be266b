#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "polytile/construct.hpp"

using namespace polytile;

namespace {

std::vector<int> word_of(const std::string& digits) {
    std::vector<int> w;
    for (char ch : digits) w.push_back(ch - '0');
    return w;
}

IntegerSet window_set(Int g) { return IntegerSet{0, 1, g, g + 1}; }

}  // namespace

TEST_SUITE_BEGIN("construct");

TEST_CASE("ReducedQuad validates and computes the working modulus") {
    ReducedQuad q = ReducedQuad::from({0, 1, 2, 300});
    CHECK(q.a == 1);
    CHECK(q.b == 2);
    CHECK(q.c == 300);
    CHECK(q.m == 301);
    CHECK(q.d1 == 1);
    CHECK(q.d2 == 1);
    CHECK_THROWS_AS(ReducedQuad::from({0, 2, 4, 6}), std::invalid_argument);
    CHECK_THROWS_AS(ReducedQuad::from({1, 2, 3, 301}), std::invalid_argument);
    CHECK_THROWS_AS(ReducedQuad::from({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("frobenius_decompose") {
    auto hj = frobenius_decompose(289, 9);
    REQUIRE(hj);
    CHECK(hj->first == 31);
    CHECK(hj->second == 1);

    hj = frobenius_decompose(72, 9);
    REQUIRE(hj);
    CHECK(hj->first == 8);
    CHECK(hj->second == 0);

    CHECK(!frobenius_decompose(71, 9));

    for (Int r = 2; r <= 9; ++r)
        for (Int m = r * r - r; m <= r * r + 30; ++m) {
            auto d = frobenius_decompose(m, r);
            if (m > r * r - r - 1) REQUIRE(d);
            if (d) CHECK(d->first * r + d->second * (r + 1) == m);
        }
}

TEST_CASE("block template concatenations stay polychromatic") {
    const auto& rows = block_templates();
    CHECK(rows.size() == 6);
    for (const BlockTemplate& row : rows) {
        CHECK(static_cast<int>(row.word_r.size()) == row.r);
        CHECK(static_cast<int>(row.word_r1.size()) == row.r + 1);
        // All 2^4 sequences of four blocks, each r or r+1 long.
        for (int mask = 0; mask < 16; ++mask) {
            std::string text;
            for (int i = 0; i < 4; ++i) text += (mask >> i & 1) ? row.word_r1 : row.word_r;
            PeriodicColoring chi(word_of(text), 3);
            CHECK(verify_polychromatic(row.base_set, chi));
        }
    }
}

TEST_CASE("table_coloring mixes blocks to the requested period") {
    const BlockTemplate* row0123 = nullptr;
    for (const auto& row : block_templates())
        if (row.base_set == IntegerSet{0, 1, 2, 3}) row0123 = &row;
    REQUIRE(row0123);
    PeriodicColoring chi = table_coloring(*row0123, 10);
    CHECK(chi.word == word_of("0120120012"));
    CHECK(verify_polychromatic(IntegerSet{0, 1, 2, 3}, chi));
    CHECK_THROWS_AS(table_coloring(*row0123, 5), std::invalid_argument);
}

TEST_CASE("single_cycle_g on the reference quad") {
    ReducedQuad q = ReducedQuad::from({0, 1, 2, 300});
    CHECK(single_cycle_g(q, false) == 150);  // inverse of 2 is 151; reflected
}

TEST_CASE("interval_count") {
    CHECK(interval_count(150, 301) == 3);
    CHECK(interval_count(5, 24) == 6);
    CHECK_THROWS_AS(interval_count(1, 24), std::invalid_argument);
}

TEST_CASE("interval subcase words match the reference patterns") {
    CHECK(subcase_1d_coloring(5, 15).word == word_of("012012012012012"));
    CHECK(subcase_1d_coloring(6, 18).word == word_of("012012120120201201"));
    CHECK(subcase_1d_coloring(6, 21).word == word_of("012012020120121201201"));
    CHECK_THROWS_AS(subcase_1d_coloring(6, 20), std::invalid_argument);

    PeriodicColoring b = subcase_1b_coloring(5, 24, 6);
    CHECK(b.word == word_of("010112122020010112122020"));
    CHECK(verify_polychromatic(IntegerSet{0, 1, 5, 6}, b));
}

TEST_CASE("interval subcase words verify against their windows") {
    for (auto [g, m] : std::vector<std::pair<Int, Int>>{{5, 15}, {6, 18}, {6, 21}, {100, 300}, {100, 303}})
        CHECK(verify_polychromatic(window_set(g), subcase_1d_coloring(g, m)));

    for (Int m : {298, 299, 301, 302, 304, 305})
        CHECK(verify_polychromatic(window_set(100), subcase_1c_coloring(100, m)));
    CHECK_THROWS_AS(subcase_1c_coloring(100, 303), std::invalid_argument);

    for (auto [g, m] : std::vector<std::pair<Int, Int>>{{5, 24}, {150, 301}, {80, 301}}) {
        Int s = interval_count(g, m);
        CHECK(verify_polychromatic(window_set(g), subcase_1b_coloring(g, m, s)));
    }
}

TEST_CASE("odd_triple_decompose") {
    CHECK(odd_triple_decompose(21) == std::array<Int, 3>{7, 7, 7});
    CHECK(odd_triple_decompose(19) == std::array<Int, 3>{7, 7, 5});
    CHECK(odd_triple_decompose(23) == std::array<Int, 3>{9, 7, 7});
    CHECK_THROWS_AS(odd_triple_decompose(17), std::invalid_argument);
    CHECK_THROWS_AS(odd_triple_decompose(20), std::invalid_argument);
    for (Int e1 = 19; e1 <= 61; e1 += 2) {
        auto [u, v, w] = odd_triple_decompose(e1);
        CHECK(u + v + w == e1);
        CHECK(u % 2 == 1);
        CHECK(v % 2 == 1);
        CHECK(w % 2 == 1);
        CHECK(u >= v);
        CHECK(v >= w);
        CHECK(w >= u - 2);
    }
}

TEST_CASE("rotation_schedule greedy totals") {
    CHECK(rotation_schedule(5, 21, 7) == std::vector<Int>{7, 7, 7, 7});
    CHECK(rotation_schedule(5, 19, 7) == std::vector<Int>{7, 7, 7, 7});
    for (Int d1 : {5, 7}) {
        for (Int e1 : {19, 21, 23, 25}) {
            Int u = odd_triple_decompose(e1)[0];
            for (Int off = 0; off < e1; ++off) {
                std::vector<Int> rot = rotation_schedule(d1, e1, u, off);
                REQUIRE(static_cast<Int>(rot.size()) == d1 - 1);
                Int total = 0;
                for (Int r : rot) {
                    CHECK(r >= u);
                    CHECK(r <= e1 - u);
                    total += r;
                }
                Int closing = mod_floor(total + off, e1);
                CHECK(closing >= u);
                CHECK(closing <= e1 - u);
            }
        }
    }
}

TEST_CASE("cycle decomposition partitions the working group") {
    struct Instance {
        IntegerSet quad;
        bool swapped;
    };
    for (const auto& inst : std::vector<Instance>{{{0, 17, 20, 309}, false},
                                                  {{0, 1, 8, 301}, false},
                                                  {{0, 22, 25, 372}, false},
                                                  {{0, 43, 120, 308}, false}}) {
        ReducedQuad q = ReducedQuad::from(inst.quad);
        CycleDecomposition cyc;
        cyc.m = q.m;
        cyc.d1 = inst.swapped ? q.d2 : q.d1;
        cyc.e1 = q.m / cyc.d1;
        cyc.B = mod_floor(inst.swapped ? q.b - q.a : q.b, q.m);
        cyc.A = mod_floor(inst.swapped ? q.b : q.b - q.a, q.m);
        std::vector<int> hits(static_cast<std::size_t>(q.m), 0);
        for (Int i = 0; i < cyc.d1; ++i)
            for (Int j = 0; j < cyc.e1; ++j) ++hits[static_cast<std::size_t>(cyc.at(i, j))];
        for (int h : hits) CHECK(h == 1);
        Int rho = cyc.wrap_offset();
        CHECK(mod_floor(rho * cyc.B, cyc.m) == mod_floor(cyc.d1 * cyc.A, cyc.m));
    }
}

TEST_CASE("multi_cycle_coloring rejects pattern preconditions") {
    CycleDecomposition cyc;
    cyc.m = 35;
    cyc.d1 = 5;
    cyc.e1 = 7;
    cyc.A = 1;
    cyc.B = 5;
    CHECK_THROWS_AS(multi_cycle_coloring(cyc, CaseKind::C2c), std::invalid_argument);
    CHECK_THROWS_AS(multi_cycle_coloring(cyc, CaseKind::C2a), std::invalid_argument);
    CHECK_THROWS_AS(multi_cycle_coloring(cyc, CaseKind::C1a), std::invalid_argument);
}

TEST_CASE("construct_3coloring routes small diameters through search") {
    Construction r = construct_3coloring({0, 1, 2, 4});
    CHECK(r.tag.kind == CaseKind::Small);
    CHECK(r.tag.q >= 3);
    CHECK(verify_polychromatic({0, 1, 2, 4}, r.coloring));
    CHECK_THROWS_AS(construct_3coloring({0, 1, 3}), std::invalid_argument);
}

TEST_CASE("construct_3coloring covers every case branch") {
    struct Pinned {
        IntegerSet set;
        CaseKind kind;
    };
    const std::vector<Pinned> pinned = {
        {{0, 150, 151, 300}, CaseKind::C1a}, {{0, 1, 2, 300}, CaseKind::C1b},
        {{0, 4, 6, 293}, CaseKind::C1c},     {{0, 200, 202, 301}, CaseKind::C1d},
        {{0, 17, 20, 309}, CaseKind::C2a},   {{0, 1, 8, 301}, CaseKind::C2b},
        {{0, 22, 25, 372}, CaseKind::C2c},   {{0, 43, 120, 308}, CaseKind::C2d},
    };
    for (const Pinned& p : pinned) {
        CAPTURE(case_name(p.kind));
        Construction r = construct_3coloring(p.set);
        CHECK(r.tag.kind == p.kind);
        CHECK(r.coloring.num_colors == 3);
        CHECK(verify_polychromatic(p.set, r.coloring));
    }
}

TEST_CASE("pinned dispatch parameters") {
    CHECK(dispatch_case(ReducedQuad::from({0, 150, 151, 300})).g == 2);

    CaseTag b = dispatch_case(ReducedQuad::from({0, 1, 2, 300}));
    CHECK(b.kind == CaseKind::C1b);
    CHECK(b.g == 150);
    CHECK(b.reflected);
    CHECK(b.s == 3);

    CaseTag c = dispatch_case(ReducedQuad::from({0, 4, 6, 293}));
    CHECK(c.kind == CaseKind::C1c);
    CHECK(c.g == 98);
    CHECK(c.reflected);

    CaseTag d = dispatch_case(ReducedQuad::from({0, 200, 202, 301}));
    CHECK(d.kind == CaseKind::C1d);
    CHECK(d.g == 101);
    CHECK(d.axis_swapped);

    CaseTag a2 = dispatch_case(ReducedQuad::from({0, 17, 20, 309}));
    CHECK(a2.kind == CaseKind::C2a);
    CHECK(a2.e1 == 78);

    CaseTag b2 = dispatch_case(ReducedQuad::from({0, 1, 8, 301}));
    CHECK(b2.kind == CaseKind::C2b);
    CHECK(b2.e1 == 77);

    CaseTag c2 = dispatch_case(ReducedQuad::from({0, 22, 25, 372}));
    CHECK(c2.kind == CaseKind::C2c);
    CHECK(c2.e1 == 15);

    CaseTag d2 = dispatch_case(ReducedQuad::from({0, 43, 120, 308}));
    CHECK(d2.kind == CaseKind::C2d);
    CHECK(d2.e1 == 77);
    CHECK(d2.u == 27);
    CHECK(d2.v == 25);
    CHECK(d2.w == 25);

    CHECK_THROWS_AS(dispatch_case(ReducedQuad::from({0, 1, 2, 288})), std::invalid_argument);
}

TEST_CASE("construction survives scaling and shifting") {
    Construction r = construct_3coloring({7, 9, 11, 607});  // 2 * {0,1,2,300} + 7
    CHECK(r.tag.kind == CaseKind::C1b);
    CHECK(r.canonical.scale == 2);
    CHECK(r.canonical.shift == 7);
    CHECK(verify_polychromatic({7, 9, 11, 607}, r.coloring));

    Construction neg = construct_3coloring({-5, 145, 146, 295});  // {0,150,151,300} - 5
    CHECK(neg.tag.kind == CaseKind::C1a);
    CHECK(verify_polychromatic({-5, 145, 146, 295}, neg.coloring));

    // gcd > 1 can drop the canonical diameter below the case threshold.
    Construction small = construct_3coloring({0, 4, 8, 1000});
    CHECK(small.tag.kind == CaseKind::Small);
    CHECK(verify_polychromatic({0, 4, 8, 1000}, small.coloring));
}

TEST_CASE("random quads construct verified colorings") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        Int c = 289 + static_cast<Int>(rng() % 1212);
        Int b = 1 + static_cast<Int>(rng() % (c - 1));
        Int a = 1 + static_cast<Int>(rng() % (c - 1));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (gcd_all({a, b, c}) != 1) continue;  // keep the canonical diameter >= 289
        Int scale = 1 + static_cast<Int>(rng() % 3);
        Int shift = static_cast<Int>(rng() % 41) - 20;
        IntegerSet s{shift, scale * a + shift, scale * b + shift, scale * c + shift};
        if (s.size() != 4) continue;
        CAPTURE(s.elements);
        Construction r = construct_3coloring(s);
        CHECK(verify_polychromatic(s, r.coloring));
    }
}

TEST_SUITE_END();
