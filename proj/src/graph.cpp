#include "satgame/graph.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace satgame {

std::vector<int> ComponentView::sizes() const
{
    std::vector<int> out;
    out.reserve(list.size());
    for (const auto& c : list)
        out.push_back(c.size);
    return out;
}

Graph Graph::empty(int n)
{
    if (n < 1 || n > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside [1, 64]");
    return Graph(n);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    Graph g = empty(n);
    for (auto [u, v] : edges)
        g = g.with_edge(u, v);
    return g;
}

Graph Graph::complete(int n)
{
    Graph g = empty(n);
    for (int v = 0; v < n; ++v)
        g.adj_[v] = g.vertices() & ~bit(v);
    g.m_ = n * (n - 1) / 2;
    return g;
}

Graph Graph::path(int n)
{
    Graph g = empty(n);
    for (int v = 0; v + 1 < n; ++v)
        g = g.with_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n)
{
    if (n < 3)
        throw GraphError("cycle needs at least 3 vertices");
    return path(n).with_edge(0, n - 1);
}

Graph Graph::star(int leaves)
{
    Graph g = empty(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g = g.with_edge(0, v);
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

int Graph::min_degree() const
{
    int best = n_;
    for (int v = 0; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

Bits Graph::isolated_vertices() const
{
    Bits out = 0;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] == 0)
            out |= bit(v);
    return out;
}

Graph Graph::with_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    if ((adj_[u] >> v) & 1)
        throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    Graph g = *this;
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
    ++g.m_;
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for_each_bit(adj_[u] & ~(bit(u + 1) - 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

Graph Graph::permuted(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw GraphError("permutation size mismatch");
    Bits seen = 0;
    for (int p : perm) {
        check_vertex(p);
        seen |= bit(p);
    }
    if (seen != vertices())
        throw GraphError("not a permutation");
    Graph g(n_);
    g.m_ = m_;
    for (int u = 0; u < n_; ++u) {
        Bits row = 0;
        for_each_bit(adj_[u], [&](int v) { row |= bit(perm[v]); });
        g.adj_[perm[u]] = row;
    }
    return g;
}

ComponentView Graph::components() const
{
    ComponentView view;
    view.index.assign(n_, -1);
    Bits left = vertices();
    while (left != 0) {
        int root = lowest(left);
        Bits comp = bit(root);
        Bits frontier = comp;
        while (frontier != 0) {
            Bits next = 0;
            for_each_bit(frontier, [&](int v) { next |= adj_[v]; });
            frontier = next & ~comp;
            comp |= next;
        }
        left &= ~comp;
        Component c{root, comp, popcount(comp), edges_within(comp)};
        for_each_bit(comp, [&](int v) { view.index[v] = static_cast<int>(view.list.size()); });
        view.list.push_back(c);
    }
    return view;
}

int Graph::edges_within(Bits mask) const
{
    int twice = 0;
    for_each_bit(mask, [&](int v) { twice += popcount(adj_[v] & mask); });
    return twice / 2;
}

bool operator==(const Graph& a, const Graph& b)
{
    if (a.n_ != b.n_ || a.m_ != b.m_)
        return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

// graph6: N(n) followed by the upper triangle in column order, six bits per
// printable byte (value + 63), zero padded.
std::string Graph::to_graph6() const
{
    std::string out;
    if (n_ <= 62) {
        out.push_back(static_cast<char>(n_ + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n_ >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n_ >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n_ & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | static_cast<int>((adj_[i] >> j) & 1);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph Graph::from_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw GraphError("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw GraphError("invalid graph6 byte");

    std::size_t pos = 0;
    int n = text[pos++] - 63;
    if (n == 63) {
        if (text.size() < 4 || text[1] == 126)
            throw GraphError("unsupported graph6 size prefix");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    }
    Graph g = empty(n);
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (text.size() - pos != (bits + 5) / 6)
        throw GraphError("graph6 length does not match vertex count");

    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                g = g.with_edge(i, j);
        }
    }
    return g;
}

std::string Graph::to_edge_list() const
{
    std::string out = std::to_string(n_) + ";";
    bool first = true;
    for (auto [u, v] : edges()) {
        out += first ? " " : ",";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw GraphError("bad integer '" + std::string(s) + "'");
    return value;
}

}  // namespace

Graph Graph::from_edge_list(std::string_view text)
{
    auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw GraphError("edge list needs 'n;' prefix");
    Graph g = empty(parse_int(text.substr(0, semi)));
    std::string_view rest = trim(text.substr(semi + 1));
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = trim(rest.substr(0, comma));
        auto dash = item.find('-');
        if (dash == std::string_view::npos)
            throw GraphError("bad edge '" + std::string(item) + "'");
        g = g.with_edge(parse_int(item.substr(0, dash)), parse_int(item.substr(dash + 1)));
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    return g;
}

}  // namespace satgame
