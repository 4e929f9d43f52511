#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "satgame/graph.hpp"

namespace satgame {

/// Isomorphism-invariant encoding of a graph: the vertex count followed by
/// the packed upper triangle of the canonically relabeled adjacency matrix.
class CanonKey {
public:
    CanonKey() = default;
    explicit CanonKey(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }
    Graph to_graph() const;

    auto operator<=>(const CanonKey&) const = default;

private:
    std::string bytes_;
};

/// Canonical relabeling: result[v] is the canonical position of vertex v.
/// Computed by colour refinement plus individualisation search, pruned with
/// twin vertices and automorphisms discovered at the leaves.
std::vector<int> canonical_labeling(const Graph& g);

CanonKey canonical_key(const Graph& g);

/// Key of the graph exactly as labeled (no canonicalisation).
CanonKey labeled_key(const Graph& g);

}  // namespace satgame

template <>
struct std::hash<satgame::CanonKey> {
    std::size_t operator()(const satgame::CanonKey& k) const noexcept
    {
        return std::hash<std::string>{}(k.bytes());
    }
};
