// One PASS/FAIL line per acceptance criterion, followed by the rows behind it.
// Exit status is nonzero if any criterion fails.

#include <iostream>
#include <string>
#include <vector>

#include "satgame/verify.hpp"

using namespace satgame;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<CheckResult> rows;
};

bool passed(const Criterion& c) { return !c.rows.empty() && all_passed(c.rows); }

std::string render_all(const VerifyOptions& opt)
{
    std::string out;
    for (const auto& s : suite_names())
        out += render_report(run_suite(s, opt), ReportFormat::Csv);
    return out;
}

}  // namespace

int main()
{
    VerifyOptions opt;
    opt.seed = 0;
    opt.fuzz_games = 10000;

    std::vector<Criterion> cs;
    cs.push_back({1, "P4 game values within the window, n=3..8", {check_p4_window(3, 8, opt)}});
    cs.push_back({2, "P5 game values within the window, n=4..8", {check_p5_window(4, 8, opt)}});
    cs.push_back({3, "tree game values equal the closed form, k=3..5, n<=9", {check_tree_exact(3, 5, 9, opt)}});
    cs.push_back({4, "traceable strategy meets its lower bound", {check_traceable_lower(opt)}});
    cs.push_back({5,
                  "one-sided strategies hold their bounds against every opponent, n<=8",
                  {check_one_sided_p4(8, opt), check_one_sided_p5(8, opt)}});
    cs.push_back({6,
                  "saturated-graph classifiers match exhaustive saturation",
                  {check_p4_classifier(7), check_p5_classifier(8), report_p4_grammar_gap(7), report_p5_grammar_gap(8)}});
    cs.push_back({7, "strategy invariants over 10000 fuzzed games", check_claims(opt)});
    cs.push_back({8, "f recurrence and trace statistics", {check_f_identity(), check_trace_stats(opt)}});

    VerifyOptions small = opt;
    small.fuzz_games = 2000;
    std::string first = render_all(small);
    std::string second = render_all(small);
    cs.push_back({9,
                  "deterministic outputs",
                  {CheckResult{"determinism", "two full suite renders are byte-identical",
                               first == second ? Verdict::Pass : Verdict::Fail,
                               std::to_string(first.size()) + " bytes"},
                   check_parallel_equals_single(opt), check_rerun_identical(opt)}});

    bool ok = true;
    for (const auto& c : cs) {
        bool p = passed(c);
        ok = ok && p;
        std::cout << (p ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << "\n";
    }
    std::cout << "\n";
    for (const auto& c : cs)
        for (const auto& r : c.rows)
            std::cout << "  " << c.id << " [" << to_string(r.verdict) << "] " << r.suite << ": " << r.check << " -- "
                      << r.detail << "\n";
    return ok ? 0 : 1;
}
