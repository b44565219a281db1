#include <catch_amalgamated.hpp>

#include <functional>

#include "ln3113/report.hpp"

using namespace ln3113;

namespace {

// a configuration that still reproduces everything but runs in milliseconds:
// the largest numerator needed anywhere is 82375
SolveConfig quick_config() {
    SolveConfig c;
    c.mordell_height = 100'000;
    c.oracle_budget = {200, 3, 7, 0};
    return c;
}

void walk(const ordered_json& j, const std::function<void(const ordered_json&)>& fn) {
    fn(j);
    if (j.is_object() || j.is_array())
        for (const auto& child : j) walk(child, fn);
}

}  // namespace

TEST_CASE("outcome classification") {
    CHECK(classify_outcome(false, false, false) == SolveStatus::match);
    CHECK(classify_outcome(false, false, true) == SolveStatus::match);
    CHECK(classify_outcome(false, true, true) == SolveStatus::incomplete);
    CHECK(classify_outcome(false, true, false) == SolveStatus::mismatch);
    CHECK(classify_outcome(true, false, false) == SolveStatus::mismatch);
    CHECK(classify_outcome(true, true, true) == SolveStatus::mismatch);
    CHECK(exit_code(RunReport{}) == 0);
}

TEST_CASE("a full quick run matches the known set") {
    const auto report = run_solve(quick_config());
    CHECK(report.status == SolveStatus::match);
    CHECK(exit_code(report) == 0);
    CHECK(report.combined == known_solutions());
    CHECK(report.missing.empty());
    CHECK(report.extra.empty());
    CHECK(report.oracle_check.ran);
    CHECK(report.oracle_check.consistent);
    REQUIRE(report.exclusions.size() == 1);
    CHECK(report.exclusions[0].find("19") != std::string::npos);
}

TEST_CASE("tiny bounds report incomplete with exit code 2") {
    SolveConfig c = quick_config();
    c.mordell_height = 100;  // loses (1232, 115, ...) and (23642486, 82375, ...)
    c.oracle_budget.y_max = 50;
    const auto report = run_solve(c);
    CHECK(report.status == SolveStatus::incomplete);
    CHECK(exit_code(report) == 2);
    CHECK(!report.missing.empty());
    CHECK(report.extra.empty());
}

TEST_CASE("branch selection adapts the expectation") {
    SolveConfig c;
    c.run_n3 = c.run_n7 = c.run_oracle = c.run_sieve = false;  // n4 only
    const auto report = run_solve(c);
    CHECK(report.combined.empty());
    CHECK(report.expected.empty());
    CHECK(report.status == SolveStatus::match);
    CHECK(exit_code(report) == 0);

    SolveConfig oracle_only;
    oracle_only.run_n3 = oracle_only.run_n4 = oracle_only.run_n7 = oracle_only.run_sieve = false;
    oracle_only.oracle_budget = {100, 3, 5, 0};
    const auto r2 = run_solve(oracle_only);
    CHECK(r2.status == SolveStatus::match);
    CHECK(r2.expected.size() == 3);  // the known tuples with y <= 100
    CHECK(r2.combined == r2.expected);
}

TEST_CASE("json report round trips byte for byte") {
    const auto report = run_solve(quick_config());
    const auto j1 = report_to_json(report);
    const std::string text1 = j1.dump(2);
    const auto parsed = report_from_json(ordered_json::parse(text1));
    const std::string text2 = report_to_json(parsed).dump(2);
    CHECK(text1 == text2);
}

TEST_CASE("json numerics are decimal strings, never numbers") {
    const auto j = report_to_json(run_solve(quick_config()));
    walk(j, [](const ordered_json& node) { CHECK(!node.is_number()); });
    // spot checks
    CHECK(j.at("solutions").at("combined").at(0).at("x").is_string());
    CHECK(j.at("bounds").at("mordell_height").get<std::string>() == "100000");
}

TEST_CASE("json layout has the fixed top level") {
    const auto j = report_to_json(run_solve(quick_config()));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"solutions", "points", "verdicts", "exclusions",
                                           "bounds", "timings"});
}

TEST_CASE("text report carries the essentials") {
    const auto report = run_solve(quick_config());
    const auto text = report_to_text(report);
    CHECK(text.find("23642486") != std::string::npos);
    CHECK(text.find("82375/9") != std::string::npos);  // rational point in line format
    CHECK(text.find("status: match") != std::string::npos);
    CHECK(text.find("NOTE: ") != std::string::npos);
    CHECK(text.find("forces-n19-excluded") != std::string::npos);
}

TEST_CASE("restricted runs round trip as well") {
    SolveConfig c;
    c.run_n3 = false;
    c.run_oracle = false;
    const auto report = run_solve(c);
    const std::string text1 = report_to_json(report).dump(2);
    const std::string text2 = report_to_json(report_from_json(ordered_json::parse(text1))).dump(2);
    CHECK(text1 == text2);
}

TEST_CASE("reports are deterministic apart from timings") {
    auto j1 = report_to_json(run_solve(quick_config()));
    auto j2 = report_to_json(run_solve(quick_config()));
    j1["timings"] = ordered_json::array();
    j2["timings"] = ordered_json::array();
    CHECK(j1.dump() == j2.dump());
}

TEST_CASE("serialization rejects corrupted payloads") {
    auto report = run_solve(quick_config());
    report.combined[0].alpha += 1;  // breaks the defining identity
    CHECK_THROWS_AS(report_to_json(report), std::logic_error);
    CHECK_THROWS_AS(report_to_text(report), std::logic_error);
}
