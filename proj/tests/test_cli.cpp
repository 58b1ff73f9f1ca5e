#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordcalc/json_io.hpp"
#include "test_util.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace ordcalc;
using namespace ordcalc::testutil;
using nlohmann::json;

namespace {

#ifndef ORDCALC_CLI_PATH
#error "ORDCALC_CLI_PATH must point at the built binary"
#endif

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& input) {
    std::string in_path = std::string(ORDCALC_CLI_PATH) + ".test_input";
    {
        std::ofstream f(in_path, std::ios::binary);
        f << input;
    }
    std::string cmd = std::string(ORDCALC_CLI_PATH) + " " + args + " < " + in_path +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    std::remove(in_path.c_str());
    return {WEXITSTATUS(status), out};
}

const char* kHilbertInput =
    R"({"M": {"ring": "Z", "rows": 1, "cols": 2, "entries": [["2","1"],["-3","1"]]},
        "sign_cols": [0, 1], "box": 12})";

} // namespace

TEST_CASE("json round trips") {
    Rng rng(555);
    Mat m = rng.matrix(3, 4, -5, 5, RingSpec::localized({2, 5}));
    m.at(0, 0) = frac(7, 10);
    CHECK(io::mat_from_json(io::mat_to_json(m)) == m);

    GenSet s = GenSet::of(rng.matrix(2, 3, 0, 4, RingSpec::integers()));
    GenSet back = io::genset_from_json(io::genset_to_json(s));
    CHECK(back.gens() == s.gens());
    CHECK(back.nonneg() == s.nonneg());

    cones::ConeRep c = cones::hrep_to_vrep(
        cones::from_hrep(int_mat({{1, 2, -1}, {0, 1, 1}}, RingSpec::rationals())));
    cones::ConeRep cb = io::cone_from_json(io::cone_to_json(c));
    CHECK(*cb.hrep == *c.hrep);
    CHECK(*cb.vrep == *c.vrep);
    CHECK(*cb.lineality == *c.lineality);

    lgroup::LatticeTerm t = lgroup::LatticeTerm::meet(
        lgroup::LatticeTerm::lin({Int(1), Int(0)}),
        lgroup::LatticeTerm::join(lgroup::LatticeTerm::lin({Int(0), Int(2)}),
                                  lgroup::LatticeTerm::neg(lgroup::LatticeTerm::lin({Int(1), Int(1)}))));
    lgroup::LatticeTerm tb = io::term_from_json(io::term_to_json(t), 2);
    Rng prng(556);
    for (int k = 0; k < 50; ++k) {
        std::vector<Rat> p = {prng.rational(-5, 5, 3), prng.rational(-5, 5, 3)};
        CHECK(t.eval(p) == tb.eval(p));
    }
}

TEST_CASE("json schema violations are rejected") {
    CHECK_THROWS_AS(io::ring_from_json(json("R")), io::schema_error);
    CHECK_THROWS_AS(io::mat_from_json(json{{"ring", "Z"}, {"rows", 1}, {"cols", 2},
                                           {"entries", json::array()}}),
                    io::schema_error);
    json bad_entry{{"ring", "Z"}, {"rows", 1}, {"cols", 1},
                   {"entries", json::array({json::array({"1", "2"})})}};
    CHECK_THROWS_AS(io::mat_from_json(bad_entry), io::schema_error); // 1/2 not in Z
    CHECK_THROWS_AS(io::genset_from_json(json{{"ring", "Z"}, {"rows", 1}, {"cols", 1},
                                              {"entries", json::array({json::array({"-1", "1"})})},
                                              {"nonneg", true}}),
                    io::schema_error);
}

TEST_CASE("hilbert subcommand with box certification") {
    CliResult r = run_cli("hilbert --quiet", kHilbertInput);
    CHECK(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("box_certified") == 12);
    GenSet basis = io::genset_from_json(out.at("basis"));
    CHECK(basis.gens() == int_mat({{1, 2, 3}, {0, 1, 2}}, RingSpec::integers()));
}

TEST_CASE("cli output is byte-identical across runs") {
    CliResult a = run_cli("hilbert --quiet", kHilbertInput);
    CliResult b = run_cli("hilbert --quiet", kHilbertInput);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("solve", "this is not json").exit_code == 1);
    CHECK(run_cli("solve", R"({"wrong": 1})").exit_code == 1);

    // precondition violation: localize over plain Z
    CliResult pre = run_cli(
        "localize", R"({"U": {"ring": "Z", "rows": 1, "cols": 1, "entries": [["1","1"]]}})");
    CHECK(pre.exit_code == 2);

    // resource cap: tiny completion budget
    CliResult cap = run_cli(
        "hilbert --completion-cap 4",
        R"({"M": {"ring": "Z", "rows": 2, "cols": 2,
             "entries": [["5","1"],["-7","1"],["-3","1"],["11","1"]]}})");
    CHECK(cap.exit_code == 3);
}

TEST_CASE("solve-eq returns a kernel basis over Q") {
    CliResult r = run_cli(
        "solve-eq --quiet",
        R"({"U": {"ring": "Q", "rows": 1, "cols": 2, "entries": [["2","1"],["-3","1"]]}})");
    CHECK(r.exit_code == 0);
    json out = json::parse(r.out);
    Mat basis = io::mat_from_json(out.at("basis"));
    CHECK(basis == int_mat({{3}, {2}}, RingSpec::rationals()));
    GenSet gens = io::genset_from_json(out.at("gens"));
    CHECK(gens.count() == 2);
}

TEST_CASE("dd output revalidates") {
    CliResult r = run_cli(
        "dd --quiet",
        R"({"dim": 2, "hrep": {"ring": "Q", "rows": 2, "cols": 2,
             "entries": [["2","1"],["-3","1"],["0","1"],["1","1"]]}})");
    CHECK(r.exit_code == 0);
    cones::ConeRep c = io::cone_from_json(json::parse(r.out)); // validates dual consistency
    CHECK(*c.vrep == int_mat({{1, 3}, {0, 2}}, RingSpec::rationals()));
}

TEST_CASE("demo-irrational sizes grow") {
    CliResult r = run_cli("demo-irrational --depth 4 --quiet", "");
    CHECK(r.exit_code == 0);
    json out = json::parse(r.out);
    const json& rows = out.at("rows");
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].at("size") == 2);
    CHECK(rows[1].at("size") == 3);
    CHECK(rows[2].at("size") == 4);
    CHECK(rows[3].at("size").get<std::size_t>() >= 4);
}

TEST_CASE("lgroup subcommands") {
    const char* pres = R"("presentation": {"n": 2, "relators": [
        {"op": "add", "args": [{"lin": [1, 0]}, {"op": "neg", "args": [{"lin": [0, 1]}]}]}]})";
    CliResult eq = run_cli("lgroup-eq --quiet",
                           std::string("{") + pres +
                               R"(, "f": {"lin": [1, 0]}, "g": {"lin": [0, 1]}})");
    CHECK(eq.exit_code == 0);
    CHECK(json::parse(eq.out).at("equal") == true);

    CliResult solve = run_cli("lgroup-solve --quiet",
                              std::string("{") + pres +
                                  R"(, "fs": [{"lin": [1, 0]}, {"op": "neg", "args": [{"lin": [1, 0]}]}]})");
    CHECK(solve.exit_code == 0);
    GenSet basis = io::genset_from_json(json::parse(solve.out).at("basis"));
    // on the diagonal x = y: lambda_1 x - lambda_2 x >= 0 for x of both signs
    CHECK(basis.gens() == int_mat({{1}, {1}}, RingSpec::integers()));
}

TEST_CASE("remaining subcommands round through the pipeline") {
    CliResult solve = run_cli("solve --quiet",
        R"({"M": {"ring": "Z", "rows": 1, "cols": 2, "entries": [["1","1"],["-1","1"]]},
            "sign_cols": [0]})");
    CHECK(solve.exit_code == 0);
    GenSet sg = io::genset_from_json(json::parse(solve.out));
    CHECK(sg.gens() == int_mat({{0, 1, 1}, {-1, 0, 1}}, RingSpec::integers()));

    CliResult inter = run_cli("intersect --quiet",
        R"({"b": {"ring": "Z", "rows": 2, "cols": 2,
                  "entries": [["2","1"],["0","1"],["0","1"],["1","1"]], "nonneg": true},
            "c": {"ring": "Z", "rows": 2, "cols": 2,
                  "entries": [["1","1"],["0","1"],["0","1"],["2","1"]], "nonneg": true}})");
    CHECK(inter.exit_code == 0);
    CHECK(io::genset_from_json(json::parse(inter.out)).gens() ==
          int_mat({{0, 2}, {2, 0}}, RingSpec::integers()));

    CliResult quot = run_cli("quotient --quiet",
        R"({"U": {"ring": "Z", "rows": 2, "cols": 2,
                  "entries": [["1","1"],["0","1"],["0","1"],["1","1"]]},
            "V": {"ring": "Z", "rows": 2, "cols": 1, "entries": [["0","1"],["1","1"]]}})");
    CHECK(quot.exit_code == 0);
    CHECK(io::genset_from_json(json::parse(quot.out)).gens() ==
          int_mat({{0, 1}, {1, 0}}, RingSpec::integers()));

    CliResult mat = run_cli("matring --quiet",
        R"({"ms": [{"ring": "Z", "rows": 2, "cols": 2,
                    "entries": [["1","1"],["0","1"],["0","1"],["-1","1"]]}]})");
    CHECK(mat.exit_code == 0);
    CHECK(io::genset_from_json(json::parse(mat.out)).count() == 2);

    CliResult loc = run_cli("localize --quiet",
        R"({"U": {"ring": {"Zloc": [2]}, "rows": 1, "cols": 2,
                  "entries": [["2","1"],["-1","1"]]}})");
    CHECK(loc.exit_code == 0);
    CHECK(io::genset_from_json(json::parse(loc.out)).count() == 3);

    CliResult span = run_cli("change-span --quiet",
        R"({"U": {"ring": "Z", "rows": 1, "cols": 1, "entries": [["1","1"]]},
            "V": {"ring": "Z", "rows": 1, "cols": 2, "entries": [["2","1"],["3","1"]]},
            "M": {"ring": "Z", "rows": 1, "cols": 2, "entries": [["2","1"],["3","1"]]},
            "N": {"ring": "Z", "rows": 2, "cols": 1, "entries": [["-1","1"],["1","1"]]},
            "S": {"ring": "Z", "rows": 1, "cols": 1, "entries": [["1","1"]], "nonneg": true}})");
    CHECK(span.exit_code == 0);
    CHECK(io::genset_from_json(json::parse(span.out)).gens() ==
          int_mat({{-3, -1, 3}, {2, 1, -2}}, RingSpec::integers()));

    // multi-row rational equations through field-eq
    CliResult multi = run_cli("field-eq --quiet",
        R"({"M": {"ring": "Q", "rows": 2, "cols": 3,
                  "entries": [["1","1"],["1","1"],["-1","1"],["1","1"],["-1","1"],["0","1"]]}})");
    CHECK(multi.exit_code == 0);
    CHECK(io::genset_from_json(json::parse(multi.out)).gens() ==
          int_mat({{1}, {1}, {2}}, RingSpec::rationals()));
}

TEST_CASE("out flag writes the file") {
    std::string path = std::string(ORDCALC_CLI_PATH) + ".test_out.json";
    CliResult r = run_cli("field-eq --quiet --out " + path, R"({"p": [["2","1"],["-3","1"]]})");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    json out = json::parse(f);
    GenSet g = io::genset_from_json(out);
    CHECK(g.count() == 1);
    CHECK(g.gens().at(0, 0) == frac(1, 2));
    CHECK(g.gens().at(1, 0) == frac(1, 3));
    std::remove(path.c_str());
}
