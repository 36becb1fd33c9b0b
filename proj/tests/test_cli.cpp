#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulercalc/cli/runner.hpp"

using namespace eulercalc;
using namespace eulercalc::cli;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::filesystem::path> bundled() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(EULERCALC_SCENARIO_DIR))
        if (e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

Report run_text(const std::string& text, std::size_t jobs = 1) { return run(parse_scenario(text), jobs); }

}  // namespace

TEST(Scenario, BundledSuitesPass) {
    const auto files = bundled();
    EXPECT_GE(files.size(), 7u);
    for (const auto& f : files) {
        Report r = run(parse_scenario(slurp(f)), 2);
        EXPECT_EQ(r.exit_code(), 0) << f;
        for (const auto& c : r.results) EXPECT_EQ(c.status, "pass") << f << " " << c.id << " " << c.message;
    }
}

TEST(Scenario, ReportsAreIndependentOfJobs) {
    for (const auto& f : bundled()) {
        const Scenario sc = parse_scenario(slurp(f));
        const std::string a = run(sc, 1).to_json().dump(2);
        EXPECT_EQ(a, run(sc, 4).to_json().dump(2)) << f;
        EXPECT_EQ(a, run(sc, 1).to_json().dump(2)) << f;
    }
}

TEST(Scenario, SeedChangesRandomCasesOnly) {
    const std::string text = R"({"name": "s", "checks": [{"id": "d", "kind": "triangle",
        "inputs": {"space": "P1", "open": "P1_chart_N", "random": 5}}]})";
    Scenario a = parse_scenario(text);
    Scenario b = a;
    b.seed = 7;
    EXPECT_EQ(a.seed, default_seed);
    EXPECT_EQ(run(a).results[0].status, "pass");
    EXPECT_EQ(run(b).results[0].status, "pass");
    EXPECT_NE(run(a).to_json().dump(), run(b).to_json().dump());
}

TEST(Scenario, MalformedJsonReportsPosition) {
    try {
        (void)parse_scenario("{\"name\": \"x\",\n  \"checks\": [}\n");
        FAIL();
    } catch (const json::parse_error& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(Scenario, UnknownKindAndReferences) {
    EXPECT_THROW(run_text(R"({"checks": [{"id": "a", "kind": "magic"}]})"), SchemaError);
    EXPECT_THROW(run_text(R"({"checks": [{"id": "a", "kind": "theorem_main", "inputs": {"map": "nope"}}]})"), SchemaError);
    EXPECT_THROW(run_text(R"({"checks": [{"id": "a", "kind": "custom_op", "inputs": {"lhs": {"op": "nope"}, "rhs": 1}}]})"),
                 SchemaError);
    EXPECT_THROW(parse_scenario(R"({"spaces": {"s": {"complex": "cone6", "cells": [[0], [0, 1, 2]]}}})"), SchemaError);
    EXPECT_THROW(parse_scenario(R"({"spaces": {"disk_C": {"complex": "cone6", "cells": "all"}}})"), SchemaError);
}

TEST(Scenario, CounterexamplePassesExactlyOnInequality) {
    Report r = run_text(R"({"checks": [
        {"id": "holds", "kind": "counterexample", "inputs": {"check": {"kind": "theorem_main", "inputs": {"map": "z2_cover"}}}},
        {"id": "fails", "kind": "counterexample", "inputs": {"check": {"kind": "theorem_main", "inputs": {"map": "open_interval_to_point"}}}}]})");
    EXPECT_EQ(r.results[0].status, "fail");
    EXPECT_EQ(r.results[1].status, "pass");
    EXPECT_EQ(r.exit_code(), 1);
}

TEST(Scenario, ExecutionErrorsAreRecorded) {
    Report r = run_text(R"({"checks": [{"id": "n", "kind": "custom_op",
        "inputs": {"lhs": {"op": "add", "args": ["1@P1", "1@disk_C"]}, "rhs": 0}}]})");
    EXPECT_EQ(r.results[0].status, "error");
    EXPECT_FALSE(r.results[0].message.empty());
    EXPECT_EQ(r.exit_code(), 1);
    r.results[0].internal = true;
    EXPECT_EQ(r.exit_code(), 3);
}

TEST(Scenario, DefinitionsAndCustomOps) {
    Report r = run_text(R"({
      "complexes": {"tri": {"facets": [[0, 1, 2]]}},
      "spaces": {"open_tri": {"complex": "tri", "cells": [[0, 1, 2]]}, "tri_all": {"complex": "tri", "cells": "all"}},
      "functions": {"bump": {"space": "tri_all", "values": [[[0], 5]], "default": 1}},
      "maps": {"tri_in": {"source": "open_tri", "target": "tri_all", "vertex_map": [[0, 0], [1, 1], [2, 2]]}},
      "checks": [
        {"id": "chi", "kind": "custom_op", "inputs": {"lhs": {"op": "chi_c", "args": ["open_tri"]}, "rhs": 1}},
        {"id": "int", "kind": "custom_op", "inputs": {"lhs": {"op": "euler_integral_c", "args": ["bump"]}, "rhs": 5}},
        {"id": "dd", "kind": "dual_involution", "inputs": {"space": "tri_all", "functions": ["bump"]}},
        {"id": "not_proper", "kind": "counterexample", "inputs": {"check": {"kind": "theorem_main", "inputs": {"map": "tri_in"}}}}
      ]})");
    for (const auto& c : r.results) EXPECT_EQ(c.status, "pass") << c.id << " " << c.message;
}

TEST(Report, CanonicalFields) {
    Report r = run_text(R"({"name": "x", "seed": 3, "checks": [{"id": "c", "kind": "cech", "inputs": {"cover": "P1_two_chart"}}]})");
    json j = r.to_json();
    EXPECT_EQ(j["scenario"], "x");
    EXPECT_EQ(j["seed"], 3);
    EXPECT_EQ(j["engine"], engine_version);
    EXPECT_EQ(j["summary"]["pass"], 1);
    EXPECT_EQ(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
    EXPECT_FALSE(j["checks"][0].contains("elapsed_ms"));
    EXPECT_TRUE(r.to_json(true)["checks"][0].contains("elapsed_ms"));
}

TEST(Schema, RegistryRoundTrip) {
    const json doc = export_registry(models::registry());
    Environment env{models::Registry{}};
    load_definitions(env, doc);
    EXPECT_EQ(export_registry(env.registry()), doc);
    EXPECT_EQ(env.registry().size(), models::registry().size());
}

TEST(Schema, SingleEntryRoundTrip) {
    for (const auto& entry : models::registry().entries()) {
        const std::string name = entry.substr(entry.find(':') + 1);
        const json doc = export_registry(models::registry(), name);
        Environment env{models::Registry{}};
        load_definitions(env, doc);
        EXPECT_EQ(export_registry(env.registry(), name), doc) << name;
    }
    EXPECT_THROW(export_registry(models::registry(), "nope"), MalformedInput);
}

TEST(Schema, FunctionEncoding) {
    const CellSet& x = models::registry().space("closed_interval").space;
    auto d = dual(ConstructibleFunction::one(x));
    json j = function_to_json(d);
    EXPECT_EQ(j["values"], json::parse("[[[0, 1], -1]]"));
    EXPECT_EQ(function_from_json(x, j, ""), d);
}

TEST(Eval, OperationsByName) {
    Environment env;
    Evaluator ev(env);
    EXPECT_EQ(std::get<Integer>(ev.call("chi_c", {ev.evaluate_arg("P1")})), 2);
    auto d = std::get<ConstructibleFunction>(ev.call("dual", {ev.evaluate_arg("1@closed_interval")}));
    EXPECT_EQ(d(Simplex{0, 1}), -1);
    EXPECT_THROW(ev.call("dual", {}), OpError);
    EXPECT_THROW(ev.call("nope", {}), OpError);
    EXPECT_THROW(ev.evaluate_arg("no_such_name"), Error);
    auto psi = std::get<ConstructibleFunction>(
        ev.call("nearby", {ev.evaluate_arg("z3_cover"), ev.evaluate_arg("[0,1,2]"), ev.evaluate_arg("1@disk_C18")}));
    EXPECT_EQ(psi(Simplex{0}), 3);
    EXPECT_EQ(std::get<Integer>(ev.call("chi_g", {ev.evaluate_arg("P1_pole_swap"), Integer{1}})),
              std::get<Integer>(ev.call("chi_gc", {ev.evaluate_arg("P1_pole_swap"), Integer{1}})));
}

TEST(ModelsList, Lines) {
    const std::string s = models_list(models::registry());
    EXPECT_NE(s.find("space disk_C is_complex_model=true expected_chi=1 expected_chi_c=1"), std::string::npos);
    EXPECT_NE(s.find("space open_interval is_complex_model=false"), std::string::npos);
    EXPECT_GE(std::count(s.begin(), s.end(), '\n'), 15);
}
