#include "polytile/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polytile/search.hpp"

namespace polytile {

namespace {

Int mulmod(Int x, Int y, Int m) {
    return static_cast<Int>(static_cast<__int128>(x) * y % m);
}

const BlockTemplate& template_for(const IntegerSet& base) {
    for (const BlockTemplate& row : block_templates()) {
        if (row.base_set == base) return row;
    }
    throw std::invalid_argument("template_for: no block template for this set");
}

PeriodicColoring word_from_digits(std::vector<int> digits) {
    return PeriodicColoring(std::move(digits), 3);
}

}  // namespace

ReducedQuad ReducedQuad::from(const IntegerSet& canonical) {
    if (canonical.size() != 4 || canonical.min() != 0) {
        throw std::invalid_argument("ReducedQuad: need a sorted quad starting at 0");
    }
    const auto& e = canonical.elements;
    if (gcd_all(e) != 1) {
        throw std::invalid_argument("ReducedQuad: quad must have gcd 1");
    }
    ReducedQuad q;
    q.a = e[1];
    q.b = e[2];
    q.c = e[3];
    q.m = q.c - q.a + q.b;
    q.d1 = std::gcd(q.b, q.m);
    q.d2 = std::gcd(q.b - q.a, q.m);
    if (std::gcd(q.d1, q.d2) != 1) {
        throw std::logic_error("ReducedQuad: axis gcds must be coprime");
    }
    return q;
}

const char* case_name(CaseKind k) {
    switch (k) {
        case CaseKind::Small: return "small";
        case CaseKind::C1a: return "1a";
        case CaseKind::C1b: return "1b";
        case CaseKind::C1c: return "1c";
        case CaseKind::C1d: return "1d";
        case CaseKind::C2a: return "2a";
        case CaseKind::C2b: return "2b";
        case CaseKind::C2c: return "2c";
        case CaseKind::C2d: return "2d";
    }
    return "?";
}

const std::vector<BlockTemplate>& block_templates() {
    static const std::vector<BlockTemplate> rows = {
        {IntegerSet{0, 2, 3, 5}, 6, "001122", "0001122"},
        {IntegerSet{0, 1, 3, 4}, 6, "001212", "0001212"},
        {IntegerSet{0, 1, 2, 3}, 3, "012", "0012"},
        {IntegerSet{0, 3, 4, 7}, 9, "000111222", "0000111222"},
        {IntegerSet{0, 3, 5, 8}, 9, "000111222", "0000111222"},
        {IntegerSet{0, 1, 4, 5}, 7, "0001212", "00001212"},
    };
    return rows;
}

std::optional<std::pair<Int, Int>> frobenius_decompose(Int m, Int r) {
    if (m <= 0 || r <= 0) throw std::invalid_argument("frobenius_decompose: need m, r > 0");
    Int j = m % r;
    Int h = (m - j * (r + 1)) / r;
    if (h < 0) return std::nullopt;
    return std::make_pair(h, j);
}

PeriodicColoring table_coloring(const BlockTemplate& row, Int m) {
    auto hj = frobenius_decompose(m, row.r);
    if (!hj) throw std::invalid_argument("table_coloring: m too small for this block length");
    auto [h, j] = *hj;
    std::vector<int> word;
    word.reserve(static_cast<size_t>(m));
    for (Int i = 0; i < h; ++i) {
        for (char ch : row.word_r) word.push_back(ch - '0');
    }
    for (Int i = 0; i < j; ++i) {
        for (char ch : row.word_r1) word.push_back(ch - '0');
    }
    if (static_cast<Int>(word.size()) != m) {
        throw std::logic_error("table_coloring: block mix does not add up to m");
    }
    return word_from_digits(std::move(word));
}

Int single_cycle_g(const ReducedQuad& quad, bool axis_swapped) {
    Int step = axis_swapped ? quad.b - quad.a : quad.b;
    Int other = axis_swapped ? quad.b : quad.b - quad.a;
    Int inv = mod_inverse(step, quad.m);
    Int g = mulmod(inv, mod_floor(other, quad.m), quad.m);
    if (2 * g > quad.m) g = quad.m - g;
    return g;
}

Int interval_count(Int g, Int m) {
    if (g < 2) throw std::invalid_argument("interval_count: need g >= 2");
    Int s0 = (m + g - 2) / (g - 1);  // ceil(m / (g-1))
    Int s = ((s0 + 2) / 3) * 3;      // round up to a multiple of 3
    while ((m + s - 1) / s >= g) s += 3;  // safety; the closed form already fits
    return s;
}

CaseTag dispatch_case(const ReducedQuad& quad) {
    if (quad.c < 289) {
        throw std::invalid_argument("dispatch_case: case analysis needs c >= 289");
    }
    CaseTag tag;
    if (std::min(quad.d1, quad.d2) == 1) {
        tag.axis_swapped = (quad.d1 != 1);
        Int step = tag.axis_swapped ? quad.b - quad.a : quad.b;
        Int other = tag.axis_swapped ? quad.b : quad.b - quad.a;
        Int g0 = mulmod(mod_inverse(step, quad.m), mod_floor(other, quad.m), quad.m);
        tag.reflected = (2 * g0 > quad.m);
        Int g = tag.reflected ? quad.m - g0 : g0;
        tag.g = g;
        if (g < 2 || 2 * g > quad.m) {
            throw std::logic_error("dispatch_case: cycle position out of range");
        }
        if (g <= 4) {
            tag.kind = CaseKind::C1a;
            return tag;
        }
        if (quad.m == 3 * g || quad.m == 3 * g + 3) {
            tag.kind = CaseKind::C1d;
            return tag;
        }
        Int off = quad.m - 3 * g;
        if (off == -2 || off == -1 || off == 1 || off == 2 || off == 4 || off == 5) {
            tag.kind = CaseKind::C1c;
            return tag;
        }
        Int s = interval_count(g, quad.m);
        tag.s = s;
        if (!(g >= 5 && g < 2 * (quad.m / s))) {
            throw std::logic_error("dispatch_case: interval subcase precondition failed");
        }
        tag.kind = CaseKind::C1b;
        return tag;
    }
    // Two multi-element axes: use the smaller gcd that is not a multiple of 3
    // (they are coprime, so at most one of them is).
    bool swap_axes;
    if (quad.d1 % 3 == 0) {
        swap_axes = true;
    } else if (quad.d2 % 3 == 0) {
        swap_axes = false;
    } else {
        swap_axes = quad.d2 < quad.d1;
    }
    tag.axis_swapped = swap_axes;
    Int d1 = swap_axes ? quad.d2 : quad.d1;
    Int e1 = quad.m / d1;
    tag.e1 = e1;
    if (e1 % 2 == 0) {
        tag.kind = CaseKind::C2a;
    } else if (d1 % 2 == 0) {
        tag.kind = CaseKind::C2b;
    } else if (e1 <= 17) {
        tag.kind = CaseKind::C2c;
    } else {
        tag.kind = CaseKind::C2d;
        auto [u, v, w] = odd_triple_decompose(e1);
        tag.u = u;
        tag.v = v;
        tag.w = w;
    }
    return tag;
}

PeriodicColoring subcase_1b_coloring(Int g, Int m, Int s) {
    if (s <= 0 || s % 3 != 0) throw std::invalid_argument("subcase_1b_coloring: s must be a positive multiple of 3");
    Int base = m / s;
    Int rem = m % s;
    std::vector<int> word(static_cast<size_t>(m), 0);
    Int pos = 0;
    for (Int i = 0; i < s; ++i) {
        Int len = base + (i < rem ? 1 : 0);
        int first = static_cast<int>(i % 3);
        int second = (first + 1) % 3;
        for (Int t = 0; t < len; ++t) {
            word[static_cast<size_t>(pos++)] = (t % 2 == 0) ? first : second;
        }
    }
    if (pos != m) throw std::logic_error("subcase_1b_coloring: intervals do not tile the period");
    return word_from_digits(std::move(word));
}

PeriodicColoring subcase_1c_coloring(Int g, Int m) {
    // Tripling the working set {0, 1, g, g+1} mod m lands in a translate of a
    // block-template set; color position n by the template word at 3n mod m.
    Int off = m - 3 * g;
    const IntegerSet* base = nullptr;
    static const IntegerSet near2{0, 2, 3, 5};
    static const IntegerSet near1{0, 1, 3, 4};
    static const IntegerSet plus4{0, 3, 4, 7};
    static const IntegerSet plus5{0, 3, 5, 8};
    if (off == -2 || off == 2) base = &near2;
    else if (off == -1 || off == 1) base = &near1;
    else if (off == 4) base = &plus4;
    else if (off == 5) base = &plus5;
    else throw std::invalid_argument("subcase_1c_coloring: m - 3g outside the template band");
    PeriodicColoring table = table_coloring(template_for(*base), m);
    std::vector<int> word(static_cast<size_t>(m), 0);
    for (Int n = 0; n < m; ++n) {
        word[static_cast<size_t>(n)] = table.word[static_cast<size_t>(mod_floor(3 * n, m))];
    }
    return word_from_digits(std::move(word));
}

PeriodicColoring subcase_1d_coloring(Int g, Int m) {
    if (m != 3 * g && m != 3 * g + 3) {
        throw std::invalid_argument("subcase_1d_coloring: need m = 3g or m = 3g + 3");
    }
    std::vector<int> word(static_cast<size_t>(m), 0);
    if (g % 3 != 0) {
        for (Int n = 0; n < m; ++n) word[static_cast<size_t>(n)] = static_cast<int>(n % 3);
        return word_from_digits(std::move(word));
    }
    Int len = (m == 3 * g) ? g : g + 1;
    // Interval phases chosen so both g and g+1 land on all three colors.
    const int phases_3g[3] = {0, 1, 2};
    const int phases_3g3[3] = {0, 2, 1};
    const int* phases = (m == 3 * g) ? phases_3g : phases_3g3;
    Int pos = 0;
    for (int i = 0; i < 3; ++i) {
        for (Int t = 0; t < len; ++t) {
            word[static_cast<size_t>(pos++)] = static_cast<int>((phases[i] + t) % 3);
        }
    }
    return word_from_digits(std::move(word));
}

Int CycleDecomposition::wrap_offset() const {
    Int beta = B / d1;
    Int rho = mulmod(mod_floor(A, e1), mod_inverse(mod_floor(beta, e1), e1), e1);
    if (mod_floor(mulmod(rho, B, m) - mulmod(d1, A, m), m) != 0) {
        throw std::logic_error("CycleDecomposition: wrap offset equation failed");
    }
    return rho;
}

std::array<Int, 3> odd_triple_decompose(Int e1) {
    if (e1 < 19 || e1 % 2 == 0) {
        throw std::invalid_argument("odd_triple_decompose: need odd e1 >= 19");
    }
    Int u;
    switch (e1 % 3) {
        case 0: u = e1 / 3; break;
        case 1: u = (e1 + 2) / 3; break;
        default: u = (e1 + 4) / 3; break;
    }
    std::array<Int, 3> parts = {u, u, u};
    Int excess = 3 * u - e1;  // 0, 2, or 4
    for (int i = 2; excess > 0 && i >= 1; --i) {
        parts[static_cast<size_t>(i)] -= 2;
        excess -= 2;
    }
    if (parts[0] + parts[1] + parts[2] != e1 || parts[2] < 3 ||
        parts[0] % 2 == 0 || parts[1] % 2 == 0 || parts[2] % 2 == 0) {
        throw std::logic_error("odd_triple_decompose: bad decomposition");
    }
    return parts;
}

std::vector<Int> rotation_schedule(Int d1, Int e1, Int u, Int wrap_offset) {
    if (d1 < 2 || u < 1 || 2 * u > e1) {
        throw std::invalid_argument("rotation_schedule: need d1 >= 2 and u <= e1/2");
    }
    std::vector<Int> rots(static_cast<size_t>(d1 - 1), u);
    Int total = (d1 - 1) * u;
    auto closes = [&](Int t) {
        Int r = mod_floor(t + wrap_offset, e1);
        return r >= u && r <= e1 - u;
    };
    size_t bump = 0;
    while (!closes(total)) {
        while (bump < rots.size() && rots[bump] == e1 - u) ++bump;
        if (bump == rots.size()) {
            throw std::logic_error("rotation_schedule: no schedule in range");
        }
        ++rots[bump];
        ++total;
    }
    return rots;
}

PeriodicColoring multi_cycle_coloring(const CycleDecomposition& cyc, CaseKind kind) {
    Int m = cyc.m, d1 = cyc.d1, e1 = cyc.e1;
    if (d1 * e1 != m) throw std::invalid_argument("multi_cycle_coloring: d1 * e1 != m");
    std::vector<int> word(static_cast<size_t>(m), -1);
    auto put = [&](Int i, Int j, int color) {
        size_t pos = static_cast<size_t>(cyc.at(i, j));
        if (word[pos] != -1) throw std::logic_error("multi_cycle_coloring: cycles overlap");
        word[pos] = color;
    };
    switch (kind) {
        case CaseKind::C2a: {
            if (e1 % 2 != 0) throw std::invalid_argument("multi_cycle_coloring: 2a needs even cycle length");
            for (Int i = 0; i < d1; ++i) {
                for (Int j = 0; j < e1; ++j) {
                    int color;
                    if (d1 % 2 == 1 && i == d1 - 1) color = 1 + static_cast<int>(j % 2);
                    else if (i % 2 == 0) color = static_cast<int>(j % 2);
                    else color = (j % 2 == 0) ? 0 : 2;
                    put(i, j, color);
                }
            }
            break;
        }
        case CaseKind::C2b: {
            if (d1 % 2 != 0 || e1 % 2 != 1) {
                throw std::invalid_argument("multi_cycle_coloring: 2b needs d1 even, e1 odd");
            }
            for (Int i = 0; i < d1; ++i) {
                for (Int j = 0; j < e1; ++j) {
                    int color;
                    if (i % 2 == 0) color = (j == e1 - 1) ? 1 : static_cast<int>(j % 2);
                    else color = (j == 0 || j % 2 == 1) ? 2 : 0;
                    put(i, j, color);
                }
            }
            break;
        }
        case CaseKind::C2c: {
            if (e1 % 3 != 0) throw std::invalid_argument("multi_cycle_coloring: 2c needs 3 | e1");
            for (Int i = 0; i < d1; ++i) {
                Int phase = (i == d1 - 1) ? 2 : i % 2;
                for (Int j = 0; j < e1; ++j) {
                    put(i, j, static_cast<int>((j + phase) % 3));
                }
            }
            break;
        }
        case CaseKind::C2d: {
            auto [u, v, w] = odd_triple_decompose(e1);
            std::vector<int> q0(static_cast<size_t>(e1), 0);
            for (Int j = 0; j < u; ++j) q0[static_cast<size_t>(j)] = static_cast<int>(j % 2);
            for (Int j = 0; j < v; ++j) q0[static_cast<size_t>(u + j)] = 1 + static_cast<int>(j % 2);
            for (Int j = 0; j < w; ++j) q0[static_cast<size_t>(u + v + j)] = (j % 2 == 0) ? 2 : 0;
            std::vector<Int> rots = rotation_schedule(d1, e1, u, cyc.wrap_offset());
            Int shift = 0;
            for (Int i = 0; i < d1; ++i) {
                if (i > 0) shift += rots[static_cast<size_t>(i - 1)];
                for (Int j = 0; j < e1; ++j) {
                    put(i, j, q0[static_cast<size_t>(mod_floor(j - shift, e1))]);
                }
            }
            break;
        }
        default:
            throw std::invalid_argument("multi_cycle_coloring: not a multi-cycle case");
    }
    for (int c : word) {
        if (c == -1) throw std::logic_error("multi_cycle_coloring: cycles miss a position");
    }
    return word_from_digits(std::move(word));
}

namespace {

PeriodicColoring expand_by_scale(const PeriodicColoring& inner, Int scale) {
    if (scale == 1) return inner;
    Int p = inner.period();
    std::vector<int> word(static_cast<size_t>(scale * p), 0);
    for (Int n = 0; n < scale * p; ++n) {
        word[static_cast<size_t>(n)] = inner.word[static_cast<size_t>(n / scale)];
    }
    return PeriodicColoring(std::move(word), inner.num_colors);
}

PeriodicColoring pull_back_unit(const PeriodicColoring& word3, Int step, Int m) {
    Int inv = mod_inverse(step, m);
    std::vector<int> word(static_cast<size_t>(m), 0);
    for (Int n = 0; n < m; ++n) {
        word[static_cast<size_t>(n)] = word3.word[static_cast<size_t>(mulmod(inv, n, m))];
    }
    return PeriodicColoring(std::move(word), word3.num_colors);
}

}  // namespace

Construction construct_3coloring(const IntegerSet& s) {
    if (s.size() != 4) {
        throw std::invalid_argument("construct_3coloring: need exactly four elements");
    }
    CanonicalSet canon = canonicalize(s);
    const Int a = canon.set.elements[1];
    const Int b = canon.set.elements[2];
    const Int c = canon.set.elements[3];

    CaseTag tag;
    PeriodicColoring inner({0}, 1);
    if (c < 289) {
        SearchConfig cfg;
        cfg.num_colors = 3;
        SearchOutcome out = search_coloring(canon.set, cfg);
        if (out.status != SearchStatus::Found) {
            cfg.q_max = 8 * c + 16;
            cfg.node_budget = 200'000'000;
            out = search_coloring(canon.set, cfg);
        }
        if (out.status != SearchStatus::Found || !out.witness) {
            throw std::logic_error("construct_3coloring: search found no small-period coloring");
        }
        tag.kind = CaseKind::Small;
        tag.q = out.q;
        inner = *out.witness;
    } else {
        ReducedQuad quad = ReducedQuad::from(canon.set);
        tag = dispatch_case(quad);
        const Int m = quad.m;
        switch (tag.kind) {
            case CaseKind::C1a:
            case CaseKind::C1b:
            case CaseKind::C1c:
            case CaseKind::C1d: {
                Int g = tag.g;
                PeriodicColoring word3({0}, 1);
                if (tag.kind == CaseKind::C1a) {
                    IntegerSet work{0, 1, g, g + 1};
                    word3 = table_coloring(template_for(work), m);
                } else if (tag.kind == CaseKind::C1b) {
                    word3 = subcase_1b_coloring(g, m, tag.s);
                } else if (tag.kind == CaseKind::C1c) {
                    word3 = subcase_1c_coloring(g, m);
                } else {
                    word3 = subcase_1d_coloring(g, m);
                }
                IntegerSet work{0, 1, mod_floor(g, m), mod_floor(g + 1, m)};
                if (!verify_polychromatic_mod(work, m, word3)) {
                    throw std::logic_error(std::string("construct_3coloring: case ") +
                                           case_name(tag.kind) + " working coloring failed");
                }
                Int step = tag.axis_swapped ? b - a : b;
                if (tag.reflected) {
                    // chi(-n) is polychromatic for the reflected working set, and
                    // negating the unit step realizes it in one pull-back.
                    step = m - mod_floor(step, m);
                }
                inner = pull_back_unit(word3, step, m);
                break;
            }
            case CaseKind::C2a:
            case CaseKind::C2b:
            case CaseKind::C2c:
            case CaseKind::C2d: {
                CycleDecomposition cyc;
                cyc.m = m;
                cyc.d1 = tag.axis_swapped ? quad.d2 : quad.d1;
                cyc.e1 = m / cyc.d1;
                cyc.B = mod_floor(tag.axis_swapped ? b - a : b, m);
                cyc.A = mod_floor(tag.axis_swapped ? b : b - a, m);
                inner = multi_cycle_coloring(cyc, tag.kind);
                break;
            }
            default:
                throw std::logic_error("construct_3coloring: dispatch returned no case");
        }
        if (!verify_polychromatic_mod(canon.set, m, inner)) {
            throw std::logic_error(std::string("construct_3coloring: case ") +
                                   case_name(tag.kind) + " coloring failed verification");
        }
    }

    PeriodicColoring full = expand_by_scale(inner, canon.scale);
    if (!verify_polychromatic(s, full)) {
        throw std::logic_error("construct_3coloring: final coloring failed verification");
    }
    return Construction{std::move(full), tag, std::move(canon)};
}

}  // namespace polytile
