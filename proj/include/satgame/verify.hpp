#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace satgame {

enum class Verdict { Pass, Fail, Deviation };

std::string to_string(Verdict v);  // "PASS" / "FAIL" / "DEVIATION"

/// One row of a verification report. Deviation rows record a known conflict
/// with a printed statement; they do not count as failures.
struct CheckResult {
    std::string suite;
    std::string check;
    Verdict verdict = Verdict::Pass;
    std::string detail;
};

struct VerifyOptions {
    int n_max = 0;                // 0: each suite's default
    std::uint64_t seed = 0;
    int fuzz_games = 10000;
    int threads = 1;              // solver root workers
};

// Individual checks. Each returns one row; details never contain timings.
CheckResult check_p4_window(int n_lo, int n_hi, const VerifyOptions& opt);
CheckResult check_p5_window(int n_lo, int n_hi, const VerifyOptions& opt);
CheckResult check_tree_exact(int k_lo, int k_hi, int n_max, const VerifyOptions& opt);
CheckResult check_traceable_lower(const VerifyOptions& opt);
CheckResult check_one_sided_p4(int n_max, const VerifyOptions& opt);
CheckResult check_one_sided_p5(int n_max, const VerifyOptions& opt);
CheckResult check_p4_classifier(int n_max);
CheckResult check_p5_classifier(int n_max);
/// Known conflicts between the printed characterizations and saturation.
CheckResult report_p4_grammar_gap(int n_max);
CheckResult report_p5_grammar_gap(int n_max);
std::vector<CheckResult> check_claims(const VerifyOptions& opt);
CheckResult check_f_identity();
CheckResult check_trace_stats(const VerifyOptions& opt);
CheckResult check_parallel_equals_single(const VerifyOptions& opt);
CheckResult check_rerun_identical(const VerifyOptions& opt);

/// graph, p4, p5, trees, traceable, star, algebra, fuzz, determinism
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(std::string_view name, const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& rows);

enum class ReportFormat { Text, Csv, Jsonl };
std::string render_report(const std::vector<CheckResult>& rows, ReportFormat format);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view s);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace satgame
