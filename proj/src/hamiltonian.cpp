#include "satgame/hamiltonian.hpp"

#include <cstdint>

namespace satgame {

namespace {

constexpr int kDpLimit = 22;

// ends[S] = local vertices at which a Hamiltonian path of S can end.
class PathTable {
public:
    PathTable(const Graph& g, Bits component)
    {
        for_each_bit(component, [&](int v) { verts_.push_back(v); });
        int c = size();
        local_adj_.assign(c, 0);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j)
                if (g.neighbors(verts_[i]) & bit(verts_[j]))
                    local_adj_[i] |= 1u << j;
        ends_.assign(std::size_t{1} << c, 0);
        for (int i = 0; i < c; ++i)
            ends_[std::size_t{1} << i] = 1u << i;
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << c); ++mask) {
            std::uint32_t e = ends_[mask];
            while (e != 0) {
                int v = std::countr_zero(e);
                e &= e - 1;
                std::uint32_t out = local_adj_[v] & ~mask;
                while (out != 0) {
                    int w = std::countr_zero(out);
                    out &= out - 1;
                    ends_[mask | (1u << w)] |= 1u << w;
                }
            }
        }
    }

    int size() const { return static_cast<int>(verts_.size()); }
    std::uint32_t full() const { return (std::uint32_t{1} << size()) - 1; }
    std::uint32_t ends(std::uint32_t mask) const { return ends_[mask]; }

    Bits to_global(std::uint32_t local) const
    {
        Bits out = 0;
        while (local != 0) {
            int i = std::countr_zero(local);
            local &= local - 1;
            out |= bit(verts_[i]);
        }
        return out;
    }

    std::optional<std::vector<int>> least_path() const
    {
        std::uint32_t starts = ends_[full()];
        if (starts == 0)
            return std::nullopt;
        // local order is ascending global order, so lowest bit is least vertex
        int cur = std::countr_zero(starts);
        std::uint32_t remaining = full() & ~(1u << cur);
        std::vector<int> path{verts_[cur]};
        while (remaining != 0) {
            std::uint32_t options = local_adj_[cur] & remaining & ends_[remaining];
            cur = std::countr_zero(options);
            remaining &= ~(1u << cur);
            path.push_back(verts_[cur]);
        }
        return path;
    }

private:
    std::vector<int> verts_;
    std::vector<std::uint32_t> local_adj_;
    std::vector<std::uint32_t> ends_;
};

// Ordered DFS for components too large for the table.
bool extend_path(const Graph& g, Bits component, Bits used, std::vector<int>& path)
{
    if (used == component)
        return true;
    int cur = path.back();
    Bits options = g.neighbors(cur) & component & ~used;
    while (options != 0) {
        int w = lowest(options);
        options &= options - 1;
        path.push_back(w);
        if (extend_path(g, component, used | bit(w), path))
            return true;
        path.pop_back();
    }
    return false;
}

std::optional<std::vector<int>> path_from(const Graph& g, Bits component, int start)
{
    std::vector<int> path{start};
    if (extend_path(g, component, bit(start), path))
        return path;
    return std::nullopt;
}

}  // namespace

bool is_connected(const Graph& g, Bits mask)
{
    if (mask == 0)
        return false;
    Bits reached = bit(lowest(mask));
    Bits frontier = reached;
    while (frontier != 0) {
        Bits next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= mask & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

std::optional<std::vector<int>> hamiltonian_path(const Graph& g, Bits component)
{
    if (component == 0)
        return std::nullopt;
    if (popcount(component) <= kDpLimit)
        return PathTable(g, component).least_path();
    for (Bits starts = component; starts != 0; starts &= starts - 1)
        if (auto p = path_from(g, component, lowest(starts)))
            return p;
    return std::nullopt;
}

Bits hamiltonian_endpoints(const Graph& g, Bits component)
{
    if (component == 0)
        return 0;
    if (popcount(component) <= kDpLimit) {
        PathTable table(g, component);
        return table.to_global(table.ends(table.full()));
    }
    Bits out = 0;
    for_each_bit(component, [&](int v) {
        if (path_from(g, component, v))
            out |= bit(v);
    });
    return out;
}

bool everywhere_traceable(const Graph& g, Bits component)
{
    if (!is_connected(g, component))
        throw GraphError("everywhere_traceable: vertex set is not a connected component");
    return hamiltonian_endpoints(g, component) == component;
}

}  // namespace satgame
