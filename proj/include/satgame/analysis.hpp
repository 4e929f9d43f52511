#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "satgame/canon.hpp"
#include "satgame/family.hpp"
#include "satgame/game.hpp"
#include "satgame/shapes.hpp"

namespace satgame {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);  // "a" or "a/b"
Rational ceil_rational(const Rational& r);

// --- saturated-graph classification ---------------------------------------

struct SaturatedClass {
    std::vector<Shape> components;
    std::string describe() const;  // e.g. "K3+K3+K1"
};

/// Unions of triangles and stars K_2 / K_{1,m} (m >= 3), or triangles plus a
/// single isolated vertex. K_{1,2} is rejected: closing it is always legal.
std::optional<SaturatedClass> classify_p4_saturated(const Graph& g);

/// Unions of K_4, T_0, T_j (j >= 2) and D_{k,l} (k, l >= 2) with at most one
/// isolated edge, or copies of K_4 plus a single isolated vertex.
std::optional<SaturatedClass> classify_p5_saturated(const Graph& g);

/// A non-trivial component every vertex of which starts a 3-vertex path:
/// joining it to any other non-trivial component creates a P_5.
bool is_standalone(const Graph& g, Bits component);

// --- enumeration -------------------------------------------------------------

struct ClassRep {
    CanonKey key;
    Graph graph;
};

/// All graphs on n vertices up to isomorphism (n <= 9), sorted by key.
std::vector<ClassRep> enumerate_graphs(int n);

/// All F-free graphs on n vertices up to isomorphism, sorted by key.
std::vector<ClassRep> enumerate_free(int n, const ForbiddenFamily& family);

/// All F-saturated graphs on n vertices up to isomorphism (n <= 9).
std::vector<ClassRep> enumerate_saturated(int n, const ForbiddenFamily& family);

// --- bounds ----------------------------------------------------------------

/// The five score windows: "pass-path" (pass-allowed path game), "p4", "p5",
/// "trees", "star".
enum class BoundKind { PassPath, P4, P5, Trees, Star };

std::string to_string(BoundKind b);
BoundKind parse_bound_kind(std::string_view text);

struct BoundReport {
    BoundKind kind = BoundKind::P4;
    int n = 0;
    std::optional<int> k;
    Rational lower{0};
    Rational upper{0};
    std::optional<int> observed;
    bool in_domain = true;
    bool holds = false;
    std::string note;

    std::string to_json() const;
};

BoundReport bound(BoundKind kind, int n, std::optional<int> k = std::nullopt,
                  std::optional<int> observed = std::nullopt);

/// Window for the family's standard game, when one applies.
std::optional<BoundReport> bound_for(const ForbiddenFamily& family, Variant variant, int n,
                                     std::optional<int> observed = std::nullopt);

struct TreeScore {
    bool exact = true;
    Rational lower{0};
    Rational upper{0};
};

/// Score of the tree-avoiding game: exact when n != 1 (mod k-1), otherwise
/// the printed interval (which may have non-integer ends).
TreeScore tree_score_formula(int n, int k);

/// Lower bound on the edge count of a saturated graph with minimum degree
/// delta in which non-adjacent degree sums are at least k - 2.
Rational degree_sum_bound(int n, int k, int delta);
int degree_sum_minimizer(int k);
/// Classical maximum edge count of a P_k-free graph, n(k-2)/2.
Rational erdos_gallai_upper(int n, int k);

/// f_0 .. f_{k-1} of the degree-excess recurrence.
std::vector<Rational> f_sequence(int n, int k);
Rational f_closed_form(int n, int k, int i);

// --- trace statistics --------------------------------------------------------

struct ThresholdStats {
    int i = 0;
    std::optional<int> t;       // first time delta >= i right after Shortener moved (or at time 0)
    std::int64_t g = 0;         // sum over v of max(d(v) - i, 0) at t
    std::optional<int> lambda;  // vertices of degree > i at t
};

struct TraceStats {
    std::vector<ThresholdStats> thresholds;  // i = 0 .. k-1
    std::vector<int> isolated_used;          // per action
    std::vector<Player> movers;              // per action

    /// Isolated vertices consumed by each Shortener move together with the
    /// Prolonger move right after it.
    std::vector<int> shortener_prolonger_pairs() const;
};

TraceStats trace_stats(const GameRecord& rec, int k);

}  // namespace satgame
