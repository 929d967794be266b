#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "polytile/cli.hpp"
#include "polytile/codensity.hpp"
#include "polytile/io.hpp"

using namespace polytile;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("pnum command") {
    CliResult r = run({"pnum", "--set", "0,1,5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "p=3\n");
    CHECK(run({"pnum", "--set", "0,1,3"}).out == "p=2\n");
    CHECK(run({"pnum", "--set", "0,1,2,4"}).out == "p=3\n");
    CHECK(run({"pnum", "--set", "0,1,3,7"}).out == "p=3\n");
    CHECK(run({"pnum", "--set", "0,1,2,3"}).out == "p=4\n");
    CHECK(run({"pnum", "--set", "0,1,2,3,4"}).out == "p>=5\n");
}

TEST_CASE("pnum json output") {
    CliResult r = run({"pnum", "--set", "0,1,5", "--format", "json"});
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["p"] == 3);
    CHECK(j["exact"] == true);
}

TEST_CASE("color output feeds verify") {
    CliResult color = run({"color", "--set", "0,1,2,4"});
    REQUIRE(color.exit_code == 0);
    CliResult verify = run({"verify", "--set", "0,1,2,4"}, color.out);
    CHECK(verify.exit_code == 0);
    CHECK(verify.out == "ok\n");
}

TEST_CASE("color explains its construction") {
    CliResult small = run({"color", "--set", "0,1,2,4", "--explain"});
    CHECK(contains(small.out, "case=small"));
    CHECK(contains(small.out, "q="));

    CliResult big = run({"color", "--set", "0,150,151,300", "--explain"});
    CHECK(contains(big.out, "case=1a"));
    CHECK(contains(big.out, "m=301"));
    CHECK(contains(big.out, "g=2"));

    CliResult json_mode = run({"color", "--set", "0,1,2,300", "--explain", "--format", "json"});
    auto j = nlohmann::json::parse(json_mode.out);
    CHECK(j["case"] == "1b");
    CHECK(j["m"] == 301);
    CHECK(j["s"] == 3);
    PeriodicColoring chi = parse_coloring_inline(
        "k=" + j["k"].dump() + ",m=" + j["m"].dump() + ",word=" + j["word"].get<std::string>());
    CHECK(verify_polychromatic({0, 1, 2, 300}, chi));
}

TEST_CASE("verify with an inline coloring") {
    CliResult ok = run({"verify", "--set", "0,1,5", "--coloring", "k=3,m=3,word=012"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "ok\n");
    CliResult bad = run({"verify", "--set", "0,1,5", "--coloring", "k=3,m=3,word=001"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "fail\n");
}

TEST_CASE("verify reads the two-line format from stdin") {
    CliResult r = run({"verify", "--set", "0,1,5"}, "k=3 m=3\n012\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "ok\n");
}

TEST_CASE("search command") {
    CliResult r = run({"search", "--set", "0,1,5", "--colors", "3"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "status=found q=3"));
    CHECK(contains(r.out, "k=3 m=3"));
    CHECK(contains(r.out, "nodes="));
    CHECK(contains(r.out, "tried=3"));

    CliResult none = run({"search", "--set", "0,1,3", "--colors", "3", "--qmax", "30"});
    CHECK(none.exit_code == 1);
    CHECK(contains(none.out, "status=exhausted"));
}

TEST_CASE("tiles command") {
    CliResult yes = run({"tiles", "--set", "0,1,5"});
    CHECK(yes.exit_code == 0);
    CHECK(contains(yes.out, "tiles=yes criterion=newman"));
    CHECK(contains(yes.out, "n=3 T=0"));

    CliResult no = run({"tiles", "--set", "0,1,3"});
    CHECK(no.exit_code == 1);
    CHECK(contains(no.out, "tiles=no criterion=newman"));

    CliResult six = run({"tiles", "--set", "0,1,2,3,4,5"});
    CHECK(six.exit_code == 0);
    CHECK(contains(six.out, "tiles=yes criterion=search"));
    CHECK(contains(six.out, "n=6"));
}

TEST_CASE("complement command") {
    CliResult r = run({"complement", "--set", "0,1,5"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "density=1/3"));
    CHECK(contains(r.out, "n="));
    CHECK(contains(r.out, "residues="));

    CliResult check = run({"complement", "--set", "0,1,3", "--verify-only", "--n", "5",
                           "--residues", "0,1"});
    CHECK(check.exit_code == 0);
    CHECK(check.out == "ok density=2/5\n");

    CliResult bad = run({"complement", "--set", "0,1,3", "--verify-only", "--n", "5",
                         "--residues", "0"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "fail\n");
}

TEST_CASE("project command") {
    CliResult r = run({"project", "--set", "(2,7,4)", "--w", "3,1,1"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "w=3,1,1"));
    CHECK(contains(r.out, "image=(-10,3)"));

    CliResult scan = run({"project", "--set", "(0,0);(1,0);(0,1);(1,2)"});
    CHECK(scan.exit_code == 0);
    CHECK(contains(scan.out, "w=2,1"));
}

TEST_CASE("pnum-zd command") {
    CliResult p4 = run({"pnum-zd", "--set", "(0,0);(1,0);(0,1);(1,1)"});
    CHECK(p4.exit_code == 0);
    CHECK(p4.out == "p=4 exact=yes\n");

    CliResult p3 = run({"pnum-zd", "--set", "(0,0);(1,0);(0,1);(1,2)"});
    CHECK(p3.exit_code == 0);
    CHECK(p3.out == "p=3 exact=no tiling=unknown\n");
}

TEST_CASE("cross command") {
    CliResult cr = run({"cross", "--d", "2", "--check"});
    CHECK(cr.exit_code == 0);
    CHECK(contains(cr.out, "kind=cross d=2 modulus=5 coefficients=1,2"));
    CHECK(contains(cr.out, "check=ok"));

    CliResult sc = run({"cross", "--d", "3", "--semicross", "--check"});
    CHECK(sc.exit_code == 0);
    CHECK(contains(sc.out, "kind=semicross d=3 modulus=4"));
    CHECK(contains(sc.out, "check=ok"));
}

TEST_CASE("t-value command") {
    CliResult r = run({"t-value", "--set", "0,1,3,7"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "t=2 exact=yes\n");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"pnum"}).exit_code == 2);                      // missing --set
    CHECK(run({"pnum", "--set", "zzz"}).exit_code == 2);      // malformed set
    CHECK(run({"frobnicate"}).exit_code == 2);                // unknown command
    CHECK(run({"pnum", "--set", "0,1", "--bogus"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);                            // no subcommand
}

TEST_CASE("help exits cleanly") {
    CliResult r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(!r.out.empty());
}

TEST_SUITE_END();
