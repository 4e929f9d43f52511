#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "satgame/game.hpp"

namespace satgame {

struct SolverConfig {
    int max_vertices = 10;
    std::uint64_t node_limit = 0;                 // 0 = unlimited
    std::chrono::milliseconds time_limit{0};      // 0 = unlimited
    int threads = 1;                              // root-level workers
};

class SolveError : public std::runtime_error {
public:
    enum class Kind { CapExceeded, Timeout, NodeLimit };

    SolveError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct SolveResult {
    int score = 0;
    std::vector<Action> principal_variation;
    std::uint64_t positions_expanded = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Thread-safe map from position key to exact final score. Concurrent
/// writers of one key always carry the same value, so the first insert wins.
class PositionTable {
public:
    explicit PositionTable(std::size_t shards = 64);

    std::optional<int> find(const std::string& key) const;
    void insert(const std::string& key, int value);
    std::size_t size() const;
    void clear();

    /// Binary file with a versioned header naming `context`. Saving
    /// overwrites; loading a missing file or a file for another context
    /// returns false and leaves the table untouched.
    void save(const std::filesystem::path& path, const std::string& context) const;
    bool load(const std::filesystem::path& path, const std::string& context);

private:
    struct Shard {
        mutable std::mutex mu;
        std::unordered_map<std::string, int> map;
    };

    Shard& shard_for(const std::string& key) const;

    mutable std::vector<Shard> shards_;
};

/// Exact minimax over the game DAG. Prolonger maximises and Shortener
/// minimises the terminal edge count; positions are merged up to
/// isomorphism.
class Solver {
public:
    Solver(int n, ForbiddenFamily family, Variant variant, SolverConfig config = {});

    SolveResult solve(Player first_mover);

    /// Exact final score from `s` under optimal play by both sides.
    int value(const Graph& g, Player to_move);

    PositionTable& table() { return table_; }
    std::string context() const;

    void save_cache(const std::filesystem::path& path) const { table_.save(path, context()); }
    bool load_cache(const std::filesystem::path& path) { return table_.load(path, context()); }

private:
    struct Budget;

    int search(const Graph& g, Player to_move, Budget& budget);
    std::vector<Action> ordered_actions(const Graph& g, Player to_move) const;
    std::string key(const Graph& g, Player to_move) const;

    int n_;
    ForbiddenFamily family_;
    Variant variant_;
    SolverConfig config_;
    PositionTable table_;
};

SolveResult solve(int n, const ForbiddenFamily& family, Variant variant, Player first_mover,
                  const SolverConfig& config = {});

/// Exact optimum for the free side while `fixed_side` always plays `fixed`.
/// `fixed` must be a deterministic function of the position.
SolveResult best_response(int n, const ForbiddenFamily& family, Variant variant, const Strategy& fixed,
                          Player fixed_side, Player first_mover, const SolverConfig& config = {});

/// Plays a solver-optimal action; ties go to the first action in
/// GameState::legal_actions() order.
Strategy optimal_strategy(SolverConfig config = {});

}  // namespace satgame
