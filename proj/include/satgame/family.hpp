#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "satgame/graph.hpp"

namespace satgame {

struct Move {
    int u = 0;
    int v = 0;

    Move() = default;
    Move(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    std::string to_string() const { return std::to_string(u) + "-" + std::to_string(v); }
    auto operator<=>(const Move&) const = default;
};

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A forbidden family: paths P_k, all trees on k vertices, the star K_{1,s},
/// or an explicit list of connected graphs.
class ForbiddenFamily {
public:
    enum class Kind { Path, Trees, Star, List };

    static ForbiddenFamily path(int k);
    static ForbiddenFamily trees(int k);
    // Forbids K_{1,leaves}, i.e. maximum degree at most leaves - 1.
    static ForbiddenFamily star(int leaves);
    static ForbiddenFamily list(std::vector<Graph> graphs);

    // "P4", "P5", "Pk:7", "Trees:5", "Star:4", "List:<g6>,<g6>"
    static ForbiddenFamily parse(std::string_view text);
    std::string to_string() const;

    Kind kind() const { return kind_; }
    int param() const { return param_; }
    const std::vector<Graph>& graphs() const { return *graphs_; }

    /// Largest edge count of any F-free graph on n vertices, or an
    /// admissible upper bound for it.
    int edge_upper_bound(int n) const;

    friend bool operator==(const ForbiddenFamily& a, const ForbiddenFamily& b);

private:
    ForbiddenFamily(Kind kind, int param) : kind_(kind), param_(param) {}

    Kind kind_;
    int param_;
    std::shared_ptr<const std::vector<Graph>> graphs_ = std::make_shared<std::vector<Graph>>();
};

/// True iff g has a simple path on k vertices.
bool has_path(const Graph& g, int k);

/// True iff some injective vertex map sends every edge of `pattern` to an
/// edge of `host`.
bool contains_subgraph(const Graph& host, const Graph& pattern);

bool is_free(const Graph& g, const ForbiddenFamily& family);

/// True iff g + e is not F-free. Requires e absent from g (throws otherwise).
bool creates_forbidden(const Graph& g, const ForbiddenFamily& family, Move e);

/// Absent edges whose addition keeps g F-free, in lexicographic order.
std::vector<Move> legal_moves(const Graph& g, const ForbiddenFamily& family);

bool has_legal_move(const Graph& g, const ForbiddenFamily& family);

/// F-free and maximal with that property.
bool is_saturated(const Graph& g, const ForbiddenFamily& family);

}  // namespace satgame
