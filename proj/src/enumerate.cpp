#include <algorithm>
#include <map>

#include "satgame/analysis.hpp"
#include "satgame/solver.hpp"

namespace satgame {

namespace {

constexpr int kEnumerationCap = 9;

// Breadth-first over edge count, merging isomorphic graphs at each level.
template <typename Extensions>
std::vector<ClassRep> grow(int n, Extensions&& extensions)
{
    if (n > kEnumerationCap)
        throw SolveError(SolveError::Kind::CapExceeded,
                         "enumeration needs n <= " + std::to_string(kEnumerationCap));
    std::map<CanonKey, Graph> level;
    CanonKey root = canonical_key(Graph::empty(n));
    level.emplace(root, root.to_graph());
    std::vector<ClassRep> out;
    while (!level.empty()) {
        std::map<CanonKey, Graph> next;
        for (const auto& [key, g] : level) {
            out.push_back({key, g});
            for (Move m : extensions(g)) {
                CanonKey k = canonical_key(g.with_edge(m.u, m.v));
                if (!next.contains(k))
                    next.emplace(k, k.to_graph());
            }
        }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const ClassRep& a, const ClassRep& b) { return a.key < b.key; });
    return out;
}

}  // namespace

std::vector<ClassRep> enumerate_graphs(int n)
{
    return grow(n, [](const Graph& g) {
        std::vector<Move> out;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (!g.has_edge(u, v))
                    out.emplace_back(u, v);
        return out;
    });
}

std::vector<ClassRep> enumerate_free(int n, const ForbiddenFamily& family)
{
    return grow(n, [&](const Graph& g) { return legal_moves(g, family); });
}

std::vector<ClassRep> enumerate_saturated(int n, const ForbiddenFamily& family)
{
    auto all = enumerate_free(n, family);
    std::vector<ClassRep> out;
    for (auto& rep : all)
        if (!has_legal_move(rep.graph, family))
            out.push_back(std::move(rep));
    return out;
}

}  // namespace satgame
