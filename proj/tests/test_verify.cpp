#include <doctest.h>

#include <json.hpp>

#include "satgame/verify.hpp"

using namespace satgame;

namespace {

VerifyOptions small()
{
    VerifyOptions o;
    o.fuzz_games = 300;
    o.seed = 9;
    return o;
}

}  // namespace

TEST_CASE("small checks pass")
{
    auto opt = small();
    CHECK(check_p4_window(3, 6, opt).verdict == Verdict::Pass);
    CHECK(check_p5_window(4, 6, opt).verdict == Verdict::Pass);
    CHECK(check_tree_exact(3, 4, 7, opt).verdict == Verdict::Pass);
    CHECK(check_one_sided_p4(6, opt).verdict == Verdict::Pass);
    CHECK(check_one_sided_p5(6, opt).verdict == Verdict::Pass);
    CHECK(check_p4_classifier(5).verdict == Verdict::Pass);
    CHECK(check_p5_classifier(5).verdict == Verdict::Pass);
    CHECK(check_f_identity().verdict == Verdict::Pass);
    CHECK(check_trace_stats(opt).verdict == Verdict::Pass);
    for (const auto& r : check_claims(opt)) {
        INFO(r.check, " -- ", r.detail);
        CHECK(r.verdict == Verdict::Pass);
    }
}

TEST_CASE("grammar gaps are deviations")
{
    CHECK(report_p4_grammar_gap(7).verdict == Verdict::Deviation);
    CHECK(report_p5_grammar_gap(7).verdict == Verdict::Deviation);
}

TEST_CASE("suites")
{
    CHECK(suite_names().size() == 9);
    CHECK_THROWS_AS(run_suite("nope", small()), std::invalid_argument);
    auto rows = run_suite("algebra", small());
    REQUIRE_FALSE(rows.empty());
    for (const auto& r : rows)
        CHECK(r.suite == "algebra");
    CHECK(all_passed(rows));
    rows.push_back({"x", "y", Verdict::Deviation, ""});
    CHECK(all_passed(rows));
    rows.push_back({"x", "z", Verdict::Fail, ""});
    CHECK_FALSE(all_passed(rows));
}

TEST_CASE("report formats")
{
    std::vector<CheckResult> rows{{"s", "plain", Verdict::Pass, "ok"},
                                  {"s", "with, comma", Verdict::Fail, "said \"no\""},
                                  {"t", "dev", Verdict::Deviation, ""}};
    CHECK(render_report(rows, ReportFormat::Text) ==
          "[PASS] s: plain -- ok\n[FAIL] s: with, comma -- said \"no\"\n[DEVIATION] t: dev -- \n");
    CHECK(render_report(rows, ReportFormat::Csv) ==
          "suite,check,verdict,detail\r\n"
          "s,plain,PASS,ok\r\n"
          "s,\"with, comma\",FAIL,\"said \"\"no\"\"\"\r\n"
          "t,dev,DEVIATION,\r\n");
    std::string jsonl = render_report(rows, ReportFormat::Jsonl);
    CHECK(jsonl.substr(0, jsonl.find('\n')) == R"({"suite":"s","check":"plain","verdict":"PASS","detail":"ok"})");
    int lines = 0;
    std::size_t pos = 0;
    for (std::size_t nl; (nl = jsonl.find('\n', pos)) != std::string::npos; pos = nl + 1, ++lines) {
        auto j = nlohmann::json::parse(jsonl.substr(pos, nl - pos));
        CHECK(j["check"] == rows[lines].check);
        CHECK(j["detail"] == rows[lines].detail);
    }
    CHECK(lines == 3);
}

TEST_CASE("rendered suites are stable across runs")
{
    auto opt = small();
    for (const char* s : {"algebra", "fuzz"})
        CHECK(render_report(run_suite(s, opt), ReportFormat::Csv) == render_report(run_suite(s, opt), ReportFormat::Csv));
}
