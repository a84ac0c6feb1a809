#include "hilbcert/cli.hpp"
#include "hilbcert/report.hpp"
#include "schema_check.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace hilbcert;
using nlohmann::json;

#ifndef HILBCERT_SCHEMA
#error "HILBCERT_SCHEMA must point at schema/report.json"
#endif

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args, int expected_code = verified) {
    args.push_back("--format");
    args.push_back("json");
    const Run r = invoke(args);
    REQUIRE_MESSAGE(r.code == expected_code, r.err);
    return json::parse(r.out);
}

const testing_support::SchemaCheck &schema() {
    static const testing_support::SchemaCheck check = [] {
        std::ifstream f(HILBCERT_SCHEMA);
        return testing_support::SchemaCheck(json::parse(f));
    }();
    return check;
}

std::string temp_path(const std::string &name) { return std::string(P_tmpdir) + "/hilbcert_test_" + name; }

} // namespace

TEST_CASE("intersect") {
    const json j = invoke_json({"intersect", "--k", "1", "--classes", "x,x,x,x"});
    CHECK(j["result"]["value"] == "12");
    CHECK(j["tool"] == "hilbcert");
    CHECK(j["version"] == "0.1.0");
    CHECK(j["subcommand"] == "intersect");
    CHECK(j["parameters"]["k"] == "1");

    const json t = invoke_json({"intersect", "--k", "5"});
    CHECK(t["result"]["table"]["x^4"] == "300");
    CHECK(t["result"]["table"]["y^2 B^2"] == "-80");
    for (const auto &inv : t["invariants"])
        CHECK(inv["passed"] == true);
}

TEST_CASE("exit codes follow the verdict") {
    CHECK(invoke({"eliminate", "--k", "1"}).code == verified);
    CHECK(invoke({"eliminate", "--k", "3", "--bound", "100"}).code == inconclusive);
    CHECK(invoke({"eliminate", "--k", "8"}).code == verified);
    CHECK(invoke({"sections", "--k", "0", "--ell", "0"}).code == inconclusive);
    CHECK(invoke({"sections", "--k", "17", "--ell", "-8"}).code == verified);
}

TEST_CASE("invalid input") {
    CHECK(invoke({}).code == invalid_input);
    CHECK(invoke({"frobnicate"}).code == invalid_input);
    CHECK(invoke({"eliminate", "--k", "1", "--wat"}).code == invalid_input);
    CHECK(invoke({"eliminate", "--k", "zero"}).code == invalid_input);
    CHECK(invoke({"eliminate", "--k", "0"}).code == invalid_input);
    CHECK(invoke({"counterexample", "--kind", "quartic"}).code == invalid_input);
    CHECK(invoke({"counterexample"}).code == invalid_input);
    CHECK(invoke({"intersect", "--classes", "x,x,x"}).code == invalid_input);
    CHECK(invoke({"equivariance", "--m", "5", "--r", "2", "--n", "2", "--x", "3", "--y", "2"}).code ==
          invalid_input);
    CHECK(invoke({"replay", "--in", temp_path("missing.json")}).code == invalid_input);
    CHECK(invoke({"eliminate", "--format", "xml"}).code == invalid_input);
}

TEST_CASE("every subcommand emits schema-valid deterministic JSON") {
    const std::vector<std::vector<std::string>> cases{
        {"intersect", "--k", "2"},
        {"intersect", "--k", "1", "--classes", "x,y,B,B"},
        {"pell", "--d", "2"},
        {"pell", "--d", "7", "--count", "3"},
        {"sections", "--k", "0", "--ell", "3"},
        {"theta-dim", "--g", "2", "--m", "6"},
        {"kummer", "--d", "17", "--f", "12"},
        {"eliminate", "--k", "2"},
        {"counterexample", "--kind", "pell", "--d", "3"},
        {"counterexample", "--kind", "nilpotent", "--m", "2", "--n", "4"},
        {"counterexample", "--kind", "cubic", "--y", "1"},
        {"search-units", "--n", "4", "--bound", "30"},
        {"equivariance", "--m", "3", "--n", "3", "--x", "2", "--y", "0"},
        {"equivariance", "--m", "7", "--n", "6", "--x", "3", "--y", "1", "--samples", "500", "--seed", "4"},
    };
    for (auto args : cases) {
        args.push_back("--format");
        args.push_back("json");
        const Run a = invoke(args), b = invoke(args);
        INFO(args.front());
        REQUIRE(a.code == verified);
        REQUIRE(a.out == b.out);
        const json j = json::parse(a.out);
        const auto errs = schema().errors(j);
        CHECK_MESSAGE(errs.empty(), (errs.empty() ? "" : errs.front()));
        for (const auto &inv : j["invariants"])
            CHECK(inv["passed"] == true);
    }
}

TEST_CASE("eliminate reports round-trip through replay") {
    const json j = invoke_json({"eliminate", "--k", "3", "--bound", "100"}, inconclusive);
    CHECK(schema().errors(j).empty());
    CHECK(j["result"]["report"]["verdict"] == "Inconclusive");
    CHECK_FALSE(j["result"]["report"]["survivors"].empty());
    const EliminationReport r = report_from_json(j["result"]["report"]);
    CHECK(replay(r).ok());

    const std::string path = temp_path("k1.json");
    REQUIRE(invoke({"eliminate", "--k", "1", "--format", "json", "--out", path}).code == verified);
    const json replayed = invoke_json({"replay", "--in", path});
    CHECK(replayed["result"]["failures"].empty());
    CHECK(replayed["result"]["verdict"] == "AllNatural");

    // Corrupt one recorded equation.
    json doc;
    {
        std::ifstream f(path);
        doc = json::parse(f);
    }
    auto &steps = doc["result"]["report"]["steps"];
    bool tampered = false;
    for (auto &step : steps)
        if (!tampered && !step["equations"].empty()) {
            step["equations"][0]["rhs"] = "999";
            tampered = true;
        }
    REQUIRE(tampered);
    const std::string bad = temp_path("k1_bad.json");
    std::ofstream(bad) << doc.dump();
    CHECK(invoke({"replay", "--in", bad}).code == check_failed);
    std::remove(path.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("markdown output") {
    const Run r = invoke({"eliminate", "--k", "1", "--format", "md"});
    CHECK(r.code == verified);
    CHECK(r.out.find("AllNatural") != std::string::npos);
    CHECK(r.out.find("Case II, subcase (ii)") != std::string::npos);
    const Run s = invoke({"search-units", "--n", "3", "--bound", "20"});
    CHECK(s.out.find("has no integer solution") != std::string::npos);
}
