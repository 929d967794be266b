#include "polytile/cli.hpp"

#include <exception>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "polytile/codensity.hpp"
#include "polytile/construct.hpp"
#include "polytile/core.hpp"
#include "polytile/io.hpp"
#include "polytile/lattice.hpp"
#include "polytile/numbers.hpp"
#include "polytile/search.hpp"
#include "polytile/tiling.hpp"

namespace polytile {

namespace {

using nlohmann::json;

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<Int>& xs) {
    std::ostringstream os;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    return os.str();
}

std::string word_text(const PeriodicColoring& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.word.size(); ++i) {
        if (c.num_colors > 10 && i) os << ',';
        os << c.word[i];
    }
    return os.str();
}

struct CommonOpts {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void add_format_flag(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

int cmd_pnum(const std::string& set_text, const CommonOpts& opts, std::ostream& out) {
    IntegerSet s = parse_set(set_text);
    int p = 0;
    bool exact = s.size() <= 4;
    if (exact) {
        p = pnum_exact_small(s);
    } else {
        p = pnum_lower_bound(s).first;
    }
    if (opts.json()) {
        out << json{{"p", p}, {"exact", exact}}.dump() << "\n";
    } else if (exact) {
        out << "p=" << p << "\n";
    } else {
        out << "p>=" << p << "\n";
    }
    return 0;
}

void append_explain(json& j, const Construction& result) {
    const CaseTag& tag = result.tag;
    j["case"] = case_name(tag.kind);
    j["shift"] = result.canonical.shift;
    j["scale"] = result.canonical.scale;
    if (tag.kind == CaseKind::Small) {
        j["q"] = tag.q;
        return;
    }
    ReducedQuad quad = ReducedQuad::from(result.canonical.set);
    j["m"] = quad.m;
    j["d1"] = quad.d1;
    j["d2"] = quad.d2;
    j["axis_swapped"] = tag.axis_swapped;
    switch (tag.kind) {
        case CaseKind::C1a:
        case CaseKind::C1c:
        case CaseKind::C1d:
            j["g"] = tag.g;
            j["reflected"] = tag.reflected;
            break;
        case CaseKind::C1b:
            j["g"] = tag.g;
            j["reflected"] = tag.reflected;
            j["s"] = tag.s;
            break;
        case CaseKind::C2d:
            j["e1"] = tag.e1;
            j["u"] = tag.u;
            j["v"] = tag.v;
            j["w"] = tag.w;
            break;
        default:
            j["e1"] = tag.e1;
            break;
    }
}

std::string explain_line(const Construction& result) {
    json j;
    append_explain(j, result);
    std::ostringstream os;
    os << "case=" << j["case"].get<std::string>() << " shift=" << j["shift"].get<Int>()
       << " scale=" << j["scale"].get<Int>();
    if (j.contains("q")) os << " q=" << j["q"].get<Int>();
    if (j.contains("m")) {
        os << " m=" << j["m"].get<Int>() << " d1=" << j["d1"].get<Int>()
           << " d2=" << j["d2"].get<Int>()
           << " axis_swapped=" << yn(j["axis_swapped"].get<bool>());
    }
    if (j.contains("g")) {
        os << " g=" << j["g"].get<Int>() << " reflected=" << yn(j["reflected"].get<bool>());
    }
    if (j.contains("s")) os << " s=" << j["s"].get<Int>();
    if (j.contains("e1")) os << " e1=" << j["e1"].get<Int>();
    if (j.contains("u")) {
        os << " u=" << j["u"].get<Int>() << " v=" << j["v"].get<Int>()
           << " w=" << j["w"].get<Int>();
    }
    return os.str();
}

int cmd_color(const std::string& set_text, bool explain, const CommonOpts& opts,
              std::ostream& out) {
    IntegerSet s = parse_set(set_text);
    Construction result = construct_3coloring(s);
    if (opts.json()) {
        json j{{"k", result.coloring.num_colors},
               {"m", result.coloring.period()},
               {"word", word_text(result.coloring)}};
        if (explain) append_explain(j, result);
        out << j.dump() << "\n";
        return 0;
    }
    out << format_coloring(result.coloring);
    if (explain) out << explain_line(result) << "\n";
    return 0;
}

int cmd_verify(const std::string& set_text, const std::string& coloring_text,
               const CommonOpts& opts, std::istream& in, std::ostream& out) {
    IntegerSet s = parse_set(set_text);
    PeriodicColoring coloring({0}, 1);
    if (!coloring_text.empty()) {
        coloring = parse_coloring_inline(coloring_text);
    } else {
        std::ostringstream buf;
        buf << in.rdbuf();
        coloring = parse_coloring(buf.str());
    }
    bool ok = verify_polychromatic(s, coloring);
    if (opts.json()) {
        out << json{{"ok", ok}}.dump() << "\n";
    } else {
        out << (ok ? "ok" : "fail") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_search(const std::string& set_text, int colors, Int qmin, Int qmax, long long budget,
               int jobs, const CommonOpts& opts, std::ostream& out) {
    IntegerSet s = parse_set(set_text);
    SearchConfig cfg;
    cfg.num_colors = colors;
    if (qmin > 0) cfg.q_min = qmin;
    if (qmax > 0) cfg.q_max = qmax;
    if (budget > 0) cfg.node_budget = budget;
    if (jobs > 0) cfg.parallelism = jobs;
    SearchOutcome res = search_coloring(s, cfg);
    const char* status = res.status == SearchStatus::Found ? "found"
                         : res.status == SearchStatus::ExhaustedRange ? "exhausted"
                                                                      : "budget";
    if (opts.json()) {
        json j{{"status", status},
               {"nodes", res.stats.nodes},
               {"tried", res.stats.tried}};
        if (res.witness) {
            j["q"] = res.q;
            j["k"] = res.witness->num_colors;
            j["m"] = res.witness->period();
            j["word"] = word_text(*res.witness);
        }
        out << j.dump() << "\n";
    } else {
        out << "status=" << status;
        if (res.witness) out << " q=" << res.q;
        out << "\n";
        if (res.witness) out << format_coloring(*res.witness);
        out << "nodes=" << res.stats.nodes << " tried=" << join_ints(res.stats.tried) << "\n";
    }
    return res.status == SearchStatus::Found ? 0 : 1;
}

int cmd_tiles(const std::string& set_text, Int nmax, const CommonOpts& opts, std::ostream& out) {
    IntegerSet s = parse_set(set_text);
    bool prime_power = as_prime_power(static_cast<Int>(s.size())).has_value();
    std::string verdict;
    const char* criterion = prime_power ? "newman" : "search";
    std::optional<TilingWitness> witness;
    if (prime_power) {
        if (newman_tiles(s)) {
            verdict = "yes";
            witness = find_tiling_complement(s, nmax);
        } else {
            verdict = "no";
        }
    } else {
        witness = find_tiling_complement(s, nmax);
        verdict = witness ? "yes" : "unknown";
    }
    if (opts.json()) {
        json j{{"tiles", verdict}, {"criterion", criterion}};
        if (witness) {
            j["n"] = witness->modulus;
            j["T"] = witness->residues;
        }
        out << j.dump() << "\n";
    } else {
        out << "tiles=" << verdict << " criterion=" << criterion;
        if (witness) out << " n=" << witness->modulus << " T=" << join_ints(witness->residues);
        out << "\n";
    }
    return verdict == "yes" ? 0 : 1;
}

int cmd_complement(const std::string& set_text, bool verify_only, Int n,
                   const std::string& residues_text, const CommonOpts& opts, std::ostream& out) {
    IntegerSet s = parse_set(set_text);
    if (verify_only) {
        if (n <= 0) throw std::invalid_argument("--verify-only requires --n");
        std::vector<Int> residues;
        if (!residues_text.empty()) residues = parse_int_vector(residues_text);
        PeriodicSet t(n, std::move(residues));
        bool ok = verify_complement(s, t);
        if (opts.json()) {
            out << json{{"ok", ok}, {"density", t.density().str()}}.dump() << "\n";
        } else if (ok) {
            out << "ok density=" << t.density().str() << "\n";
        } else {
            out << "fail" << "\n";
        }
        return ok ? 0 : 1;
    }
    CodensityBound bound = codensity_upper_bound(s);
    if (opts.json()) {
        out << json{{"density", bound.density.str()},
                    {"n", bound.complement.modulus},
                    {"residues", bound.complement.residues}}
                   .dump()
            << "\n";
    } else {
        out << "density=" << bound.density.str() << "\n";
        out << "n=" << bound.complement.modulus
            << " residues=" << join_ints(bound.complement.residues) << "\n";
    }
    return 0;
}

int cmd_project(const std::string& points_text, const std::string& w_text, const CommonOpts& opts,
                std::ostream& out) {
    auto pts = parse_points(points_text);
    if (pts.empty()) throw std::invalid_argument("--set: need at least one point");
    LatticeSet s(static_cast<int>(pts[0].size()), pts);
    ProjectionVector w = w_text.empty() ? injective_projection(s)
                                        : ProjectionVector(parse_int_vector(w_text));
    LatticeSet image = project(s, w);
    if (opts.json()) {
        out << json{{"w", w.w}, {"image", image.points}}.dump() << "\n";
    } else {
        out << "w=" << join_ints(w.w) << "\n";
        out << "image=" << format_points(image.points) << "\n";
    }
    return 0;
}

int cmd_pnum_zd(const std::string& points_text, Int area_bound, const CommonOpts& opts,
                std::ostream& out) {
    auto pts = parse_points(points_text);
    if (pts.empty()) throw std::invalid_argument("--set: need at least one point");
    LatticeSet s(static_cast<int>(pts[0].size()), pts);
    ZdPnum res = area_bound > 0 ? pnum_zd_small(s, area_bound) : pnum_zd_small(s);
    if (opts.json()) {
        json j{{"p", res.value}, {"exact", res.exact}};
        if (res.tiling_unknown) j["tiling"] = "unknown";
        out << j.dump() << "\n";
    } else {
        out << "p=" << res.value << " exact=" << yn(res.exact);
        if (res.tiling_unknown) out << " tiling=unknown";
        out << "\n";
    }
    return 0;
}

int cmd_cross(int d, bool semicross, bool check, const CommonOpts& opts, std::ostream& out) {
    AffineModColoring chi = semicross ? semicross_coloring(d) : cross_coloring(d);
    LatticeSet s = semicross ? semicross_set(d) : cross_set(d);
    bool ok = true;
    if (check) ok = verify_polychromatic_zd(s, chi);
    if (opts.json()) {
        json j{{"kind", semicross ? "semicross" : "cross"},
               {"d", d},
               {"modulus", chi.modulus},
               {"coefficients", chi.coefficients}};
        if (check) j["check"] = ok ? "ok" : "fail";
        out << j.dump() << "\n";
    } else {
        out << "kind=" << (semicross ? "semicross" : "cross") << " d=" << d
            << " modulus=" << chi.modulus << " coefficients=" << join_ints(chi.coefficients)
            << "\n";
        if (check) out << "check=" << (ok ? "ok" : "fail") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_t_value(const std::string& set_text, Int nmax, const CommonOpts& opts, std::ostream& out) {
    IntegerSet s = parse_set(set_text);
    TValue t = t_value(s, nmax);
    if (opts.json()) {
        out << json{{"t", t.value}, {"exact", t.exact}}.dump() << "\n";
    } else {
        out << "t=" << t.value << " exact=" << yn(t.exact) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Polychromatic colorings and translational tilings of integer sets"};
    app.require_subcommand(1);

    CommonOpts opts;

    std::string set_text;
    std::string points_text;
    std::string coloring_text;
    std::string w_text;
    std::string residues_text;
    bool explain = false;
    bool verify_only = false;
    bool semicross = false;
    bool check = false;
    int colors = 3;
    int jobs = 0;
    int cross_d = 1;
    Int qmin = 0, qmax = 0, nmax = 0, mod_n = 0, area_bound = 0;
    long long budget = 0;

    CLI::App* pnum = app.add_subcommand("pnum", "Polychromatic number of an integer set");
    pnum->add_option("--set", set_text, "Comma-separated integer set")->required();
    add_format_flag(pnum, opts);

    CLI::App* color = app.add_subcommand("color", "Build a 3-coloring for a 4-element set");
    color->add_option("--set", set_text, "Comma-separated integer set")->required();
    color->add_flag("--explain", explain, "Also print the construction parameters");
    add_format_flag(color, opts);

    CLI::App* verify = app.add_subcommand("verify", "Check a coloring against a set");
    verify->add_option("--set", set_text, "Comma-separated integer set")->required();
    verify->add_option("--coloring", coloring_text,
                       "Inline coloring k=<k>,m=<m>,word=<word>; omitted: read two-line "
                       "format from standard input");
    add_format_flag(verify, opts);

    CLI::App* search = app.add_subcommand("search", "Exhaustive small-period coloring search");
    search->add_option("--set", set_text, "Comma-separated integer set")->required();
    search->add_option("--colors", colors, "Number of colors (default 3)");
    search->add_option("--qmin", qmin, "Smallest period to try");
    search->add_option("--qmax", qmax, "Largest period to try");
    search->add_option("--budget", budget, "Node budget");
    search->add_option("--jobs", jobs, "Worker threads");
    add_format_flag(search, opts);

    CLI::App* tiles = app.add_subcommand("tiles", "Does the set tile the integers?");
    tiles->add_option("--set", set_text, "Comma-separated integer set")->required();
    tiles->add_option("--nmax", nmax, "Largest complement period to search");
    add_format_flag(tiles, opts);

    CLI::App* complement = app.add_subcommand("complement", "Verified complement of low density");
    complement->add_option("--set", set_text, "Comma-separated integer set")->required();
    complement->add_flag("--verify-only", verify_only, "Check a user-supplied complement");
    complement->add_option("--n", mod_n, "Complement modulus (with --verify-only)");
    complement->add_option("--residues", residues_text, "Complement residues (with --verify-only)");
    add_format_flag(complement, opts);

    CLI::App* project_cmd = app.add_subcommand("project", "Project lattice points to one less dimension");
    project_cmd->add_option("--set", points_text, "Point set, e.g. \"(0,0);(1,2)\"")->required();
    project_cmd->add_option("--w", w_text, "Projection direction (last coordinate 1); omitted: scan");
    add_format_flag(project_cmd, opts);

    CLI::App* pnum_zd = app.add_subcommand("pnum-zd", "Polychromatic number of a lattice set");
    pnum_zd->add_option("--set", points_text, "Point set, e.g. \"(0,0);(1,0);(0,1)\"")->required();
    pnum_zd->add_option("--area-bound", area_bound, "Planar tiling search area bound");
    add_format_flag(pnum_zd, opts);

    CLI::App* cross = app.add_subcommand("cross", "Cross / semicross coloring in Z^d");
    cross->add_option("--d", cross_d, "Dimension")->required();
    cross->add_flag("--semicross", semicross, "Use the semicross instead of the cross");
    cross->add_flag("--check", check, "Verify the coloring over a full periodic window");
    add_format_flag(cross, opts);

    CLI::App* tval = app.add_subcommand("t-value", "Largest tiling subset cardinality");
    tval->add_option("--set", set_text, "Comma-separated integer set")->required();
    tval->add_option("--nmax", nmax, "Largest complement period to search");
    add_format_flag(tval, opts);

    std::vector<const char*> argv;
    argv.push_back("polytile");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (pnum->parsed()) return cmd_pnum(set_text, opts, out);
        if (color->parsed()) return cmd_color(set_text, explain, opts, out);
        if (verify->parsed()) return cmd_verify(set_text, coloring_text, opts, in, out);
        if (search->parsed())
            return cmd_search(set_text, colors, qmin, qmax, budget, jobs, opts, out);
        if (tiles->parsed()) return cmd_tiles(set_text, nmax, opts, out);
        if (complement->parsed())
            return cmd_complement(set_text, verify_only, mod_n, residues_text, opts, out);
        if (project_cmd->parsed()) return cmd_project(points_text, w_text, opts, out);
        if (pnum_zd->parsed()) return cmd_pnum_zd(points_text, area_bound, opts, out);
        if (cross->parsed()) return cmd_cross(cross_d, semicross, check, opts, out);
        if (tval->parsed()) return cmd_t_value(set_text, nmax, opts, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command given\n";
    return 2;
}

}  // namespace polytile
