#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls the canonical labeling, the path search or the solver under test.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "satgame/family.hpp"
#include "satgame/graph.hpp"

namespace oracle {

using satgame::Graph;

// Upper-triangle bit index of (i, j), i < j.
inline int pair_index(int n, int i, int j)
{
    (void)n;
    return j * (j - 1) / 2 + i;
}

inline std::uint64_t code_of(const Graph& g, const std::vector<int>& perm)
{
    const int n = g.order();
    std::uint64_t code = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) {
                int a = std::min(perm[u], perm[v]);
                int b = std::max(perm[u], perm[v]);
                code |= std::uint64_t{1} << pair_index(n, a, b);
            }
    return code;
}

/// min over all n! relabelings of the packed adjacency code (n <= 9).
inline std::uint64_t brute_canonical(const Graph& g)
{
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    do {
        best = std::min(best, code_of(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph graph_from_code(int n, std::uint64_t code)
{
    Graph g = Graph::empty(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> pair_index(n, i, j)) & 1)
                g = g.with_edge(i, j);
    return g;
}

/// Number of isomorphism classes of graphs on n vertices, counted as orbits
/// of the symmetric group acting on all 2^(n(n-1)/2) labeled graphs.
inline int count_isomorphism_classes(int n)
{
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // image of each pair index under each permutation
    std::vector<std::vector<int>> pair_map(perms.size(), std::vector<int>(pairs));
    for (std::size_t p = 0; p < perms.size(); ++p)
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int a = std::min(perms[p][i], perms[p][j]);
                int b = std::max(perms[p][i], perms[p][j]);
                pair_map[p][pair_index(n, i, j)] = pair_index(n, a, b);
            }
    std::vector<bool> seen(total, false);
    int classes = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        if (seen[code])
            continue;
        ++classes;
        for (const auto& pm : pair_map) {
            std::uint64_t image = 0;
            for (int b = 0; b < pairs; ++b)
                if ((code >> b) & 1)
                    image |= std::uint64_t{1} << pm[b];
            seen[image] = true;
        }
    }
    return classes;
}

/// Does g contain a path on k vertices? Tries every ordered k-tuple.
inline bool brute_has_path(const Graph& g, int k)
{
    const int n = g.order();
    if (k > n)
        return false;
    std::vector<int> seq;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(seq.size()) == k)
            return true;
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            if (!seq.empty() && !g.has_edge(seq.back(), v))
                continue;
            used[v] = true;
            seq.push_back(v);
            if (self(self))
                return true;
            seq.pop_back();
            used[v] = false;
        }
        return false;
    };
    return rec(rec);
}

inline std::vector<int> brute_component_sizes(const Graph& g)
{
    const int n = g.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x];
        return x;
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v))
                parent[find(u)] = find(v);
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v)
        ++count[find(v)];
    std::vector<int> out;
    for (int c : count)
        if (c > 0)
            out.push_back(c);
    return out;
}

/// Tries every injective map of pattern vertices into host vertices.
inline bool brute_embeds(const Graph& host, const Graph& pattern)
{
    const int n = host.order();
    const int k = pattern.order();
    if (k > n)
        return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < k && ok; ++u)
            for (int v = u + 1; v < k && ok; ++v)
                if (pattern.has_edge(u, v) && !host.has_edge(perm[u], perm[v]))
                    ok = false;
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool brute_free(const Graph& g, const satgame::ForbiddenFamily& f)
{
    using Kind = satgame::ForbiddenFamily::Kind;
    switch (f.kind()) {
    case Kind::Path:
        return !brute_has_path(g, f.param());
    case Kind::Trees:
        for (int s : brute_component_sizes(g))
            if (s >= f.param())
                return false;
        return true;
    case Kind::Star:
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) >= f.param())
                return false;
        return true;
    case Kind::List:
        for (const auto& h : f.graphs())
            if (brute_embeds(g, h))
                return false;
        return true;
    }
    return true;
}

inline std::vector<std::pair<int, int>> brute_legal(const Graph& g, const satgame::ForbiddenFamily& f)
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v) && brute_free(g.with_edge(u, v), f))
                out.emplace_back(u, v);
    return out;
}

/// Plain minimax without memoization or symmetry reduction.
/// prolonger_to_move: true when Prolonger moves; pass_allowed: pass variant.
inline int brute_game_value(const Graph& g, const satgame::ForbiddenFamily& f, bool prolonger_to_move,
                            bool pass_allowed = false)
{
    auto moves = brute_legal(g, f);
    if (moves.empty())
        return g.size();
    int best = prolonger_to_move ? -1 : std::numeric_limits<int>::max();
    for (auto [u, v] : moves) {
        int val = brute_game_value(g.with_edge(u, v), f, !prolonger_to_move, pass_allowed);
        best = prolonger_to_move ? std::max(best, val) : std::min(best, val);
    }
    if (prolonger_to_move && pass_allowed)
        best = std::max(best, brute_game_value(g, f, false, pass_allowed));
    return best;
}

/// Isomorphism classes (as brute canonical codes) of F-saturated graphs on
/// n vertices, by scanning every labeled graph (n <= 6).
inline std::set<std::uint64_t> brute_saturated_classes(int n, const satgame::ForbiddenFamily& f)
{
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        Graph g = graph_from_code(n, code);
        if (brute_free(g, f) && brute_legal(g, f).empty())
            out.insert(brute_canonical(g));
    }
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    Graph g = Graph::empty(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g = g.with_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace oracle
