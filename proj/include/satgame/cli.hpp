#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satgame/family.hpp"

namespace satgame {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parsed command line. Everything except `threads` (taken from
/// SATGAME_THREADS) round-trips through to_args().
struct RunConfig {
    std::string command;                 // solve | play | sweep | verify | enumerate
    std::string family = "P4";
    std::optional<int> k;
    int n_lo = 0;
    int n_hi = 0;
    std::string variant = "standard";
    std::optional<std::string> first;    // P or S; unset means both where that makes sense
    std::vector<std::string> prolonger;  // play takes one name, sweep a list
    std::vector<std::string> shortener;
    std::uint64_t seed = 0;
    std::uint64_t node_cap = 0;
    std::int64_t time_cap_ms = 0;
    std::string out;
    std::string format;                  // csv | jsonl; empty for the command default
    std::string cache;                   // solve cache directory
    std::vector<std::string> suites;     // verify; empty means all
    int n_max = 0;
    int games = 10000;

    int threads = 1;

    std::vector<std::string> to_args() const;
    /// --family with --k folded in.
    ForbiddenFamily resolved_family() const;

    bool operator==(const RunConfig&) const = default;
};

/// "7" or "4..9", inclusive.
std::pair<int, int> parse_range(std::string_view text);

/// Arguments exclude the program name. Throws UsageError on bad input,
/// including invalid combinations, before anything is computed.
RunConfig parse_run_config(const std::vector<std::string>& args);

/// Exit codes: 0 all pass, 1 verification failure, 2 usage error,
/// 3 solver cap or timeout.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satgame
