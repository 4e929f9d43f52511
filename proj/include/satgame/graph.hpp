#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace satgame {

using Bits = std::uint64_t;

inline constexpr Bits bit(int v) { return Bits{1} << v; }
inline int popcount(Bits b) { return std::popcount(b); }
inline int lowest(Bits b) { return std::countr_zero(b); }

// Calls f(v) for every set bit v in ascending order.
template <typename F>
inline void for_each_bit(Bits b, F&& f)
{
    while (b != 0) {
        int v = std::countr_zero(b);
        b &= b - 1;
        f(v);
    }
}

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Component {
    int id = 0;         // smallest member vertex
    Bits members = 0;
    int size = 0;
    int edges = 0;
};

struct ComponentView {
    std::vector<Component> list;  // sorted by id
    std::vector<int> index;       // vertex -> position in list

    int count() const { return static_cast<int>(list.size()); }
    const Component& of(int v) const { return list[index[v]]; }
    int label(int v) const { return list[index[v]].id; }
    std::vector<int> sizes() const;
};

/// Simple undirected graph on at most 64 vertices, one adjacency word per
/// vertex. Values are immutable: with_edge() returns a modified copy.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    static Graph empty(int n);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph star(int leaves);

    int order() const { return n_; }
    int size() const { return m_; }
    Bits vertices() const { return n_ == 64 ? ~Bits{0} : bit(n_) - 1; }

    bool has_edge(int u, int v) const;
    Bits neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    int min_degree() const;
    int max_degree() const;
    Bits isolated_vertices() const;

    Graph with_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

    // perm[v] is the new label of vertex v.
    Graph permuted(std::span<const int> perm) const;

    ComponentView components() const;
    // Edges with both endpoints inside `mask`.
    int edges_within(Bits mask) const;

    std::string to_graph6() const;
    static Graph from_graph6(std::string_view text);
    // "n; u-v,u-v,..."
    std::string to_edge_list() const;
    static Graph from_edge_list(std::string_view text);

    friend bool operator==(const Graph& a, const Graph& b);

private:
    explicit Graph(int n) : n_(n) { adj_.fill(0); }
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::array<Bits, kMaxVertices> adj_{};
};

}  // namespace satgame
