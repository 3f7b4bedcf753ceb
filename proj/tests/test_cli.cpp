#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "equising/cli.hpp"
#include "equising/json_io.hpp"
#include "equising/poly_text.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = equising::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("canonical and semigroup-of round trip") {
    const CliResult c = run_cli({"canonical", "8", "12", "50", "101"});
    CHECK(c.code == 0);
    CHECK(c.out == "((y^2-x^3)^2-x^11*y)^2-x^19*(y^2-x^3)\n");
    std::string poly = c.out;
    poly.pop_back();
    const CliResult s = run_cli({"semigroup-of", poly});
    CHECK(s.code == 0);
    CHECK(s.out == "8 12 50 101\n");

    // the same round trip across a corpus of valid generator sequences
    for (const std::string& gens :
         {std::string("2 3"), std::string("4 6 13"), std::string("5 8"),
          std::string("4 10 21"), std::string("8 12 26 53"), std::string("6 10 31")}) {
        std::istringstream is(gens);
        std::vector<std::string> args{"canonical"};
        for (std::string w; is >> w;) args.push_back(w);
        std::string eq = run_cli(args).out;
        eq.pop_back();
        CHECK(run_cli({"semigroup-of", eq}).out == gens + "\n");
    }
}

TEST_CASE("validate exit codes and JSON") {
    const CliResult ok = run_cli({"validate", "8,12,50,101", "--json"});
    CHECK(ok.code == 0);
    const json j = json::parse(ok.out);
    CHECK(j["valid"] == true);
    CHECK(j["conductor"] == 156);
    CHECK(j["generators"] == json::array({8, 12, 50, 101}));
    CHECK(j["d"] == json::array({8, 4, 2, 1}));
    CHECK(j["m"] == json::array({12, 38, 39}));

    const CliResult bad = run_cli({"validate", "4", "6", "11", "--json"});
    CHECK(bad.code == 1);
    const json jb = json::parse(bad.out);
    CHECK(jb["valid"] == false);
    CHECK(jb["failures"][0] == "star-violated(1)");
}

TEST_CASE("enumerate with canonical equations") {
    const CliResult r = run_cli({"enumerate", "28", "--with-canonical", "--json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["milnor"] == 28);
    REQUIRE(j["classes"].size() == 4);
    CHECK(j["classes"][0]["generators"] == json::array({2, 29}));
    CHECK(j["classes"][0]["canonical"] == "y^2-x^29");
    CHECK(j["classes"][0]["puiseuxPairs"] == json::array({{29, 2}}));
    CHECK(j["classes"][3]["generators"] == json::array({5, 8}));
    CHECK(j["classes"][3]["canonical"] == "y^5-x^8");
}

TEST_CASE("irreducible verdicts and exit codes") {
    const CliResult bad = run_cli({"irreducible", "y^2-x^2"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("condition 2") != std::string::npos);

    const CliResult good = run_cli({"irreducible", "(y^2-x^3)^2-x^11*y", "--json"});
    CHECK(good.code == 0);
    const json j = json::parse(good.out);
    CHECK(j["verdict"] == "irreducible");
    CHECK(j["r"] == json::array({4, 6, 25}));
    CHECK(j["d"] == json::array({4, 2, 1}));
}

TEST_CASE("milnor equals the conductor printed by validate") {
    const CliResult v = run_cli({"validate", "4", "6", "13", "--json"});
    const CliResult c = run_cli({"canonical", "4", "6", "13"});
    std::string poly = c.out;
    poly.pop_back();
    const CliResult m = run_cli({"milnor", poly});
    CHECK(m.code == 0);
    CHECK(json::parse(v.out)["conductor"] ==
          json::parse(run_cli({"milnor", poly, "--json"}).out)["milnor"]);
    CHECK(m.out == "16\n");
}

TEST_CASE("usage and parse errors exit 2 with JSON error objects") {
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"canonical"}).code == 2);
    CHECK(run_cli({"irreducible", "y^2 + z"}).code == 2);
    CHECK(run_cli({"enumerate", "abc"}).code == 2);
    CHECK(run_cli({"validate", "4", "6", "--bogus-flag"}).code == 2);

    const CliResult je = run_cli({"milnor", "y^2-x^2", "--json"});
    CHECK(je.code == 1);
    CHECK(json::parse(je.out).contains("error"));
    const CliResult pe = run_cli({"milnor", "(((", "--json"});
    CHECK(pe.code == 2);
    CHECK(json::parse(pe.out).contains("error"));
}

TEST_CASE("intersect and puiseux") {
    const CliResult i = run_cli({"intersect", "y^2-x^3", "y"});
    CHECK(i.code == 0);
    CHECK(i.out == "3\n");
    const CliResult inf = run_cli({"intersect", "y^2-x^3", "y^2-x^3", "--json"});
    CHECK(inf.code == 0);
    CHECK(json::parse(inf.out)["intersection"] == "infinity");
    const CliResult p = run_cli({"puiseux", "4", "6", "13", "--json"});
    CHECK(json::parse(p.out)["puiseuxPairs"] == json::array({{3, 2}, {7, 2}}));
    CHECK(run_cli({"puiseux", "4", "6", "12"}).code == 1);
}

TEST_CASE("sample is reproducible and seed defaults to zero") {
    const CliResult a = run_cli({"sample", "4", "6", "13", "--seed", "9", "--terms", "2"});
    const CliResult b = run_cli({"sample", "4", "6", "13", "--seed", "9", "--terms", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const CliResult d0 = run_cli({"sample", "2", "3"});
    const CliResult d1 = run_cli({"sample", "2", "3", "--seed", "0"});
    CHECK(d0.out == d1.out);
}

TEST_CASE("poly files and stdin markers") {
    {
        std::ofstream f("cli_test_input.poly");
        f << "(y^2-x^3)^2-x^11*y\n";
    }
    const CliResult r = run_cli({"milnor", "cli_test_input.poly"});
    CHECK(r.code == 0);
    CHECK(r.out == "28\n");
    const CliResult missing = run_cli({"milnor", "no_such_file.poly"});
    CHECK(missing.code == 2);
}

TEST_CASE("polynomial JSON form round trips") {
    using namespace equising;
    const BiPoly p = parse_poly("(y^2-x^3)^2-x^11*y + (1/3)x");
    const json j = to_json(p);
    CHECK(j["terms"][0]["y"] == 4);  // print order: y-degree major
    CHECK(poly_from_json(j) == p);
    CHECK(json::parse(R"({"terms":[{"c":"-1","x":11,"y":1}]})")["terms"][0]["c"] == "-1");
    CHECK(poly_from_json(json::parse(R"({"terms":[{"c":"-1","x":11,"y":1}]})")) ==
          parse_poly("-x^11*y"));
}

TEST_CASE("max degree cap from the environment") {
    setenv("EQUISING_MAX_DEGREE", "3", 1);
    const CliResult r = run_cli({"milnor", "y^5-x^8"});
    CHECK(r.code == 2);
    unsetenv("EQUISING_MAX_DEGREE");
    CHECK(run_cli({"milnor", "y^5-x^8"}).code == 0);
}
