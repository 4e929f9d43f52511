#include "satgame/canon.hpp"

#include <algorithm>
#include <numeric>

namespace satgame {

namespace {

using Partition = std::vector<Bits>;  // ordered cells

// Split cells by neighbour counts into every cell until stable. Only cell
// positions and counts drive the result, so it commutes with relabeling.
void refine(const Graph& g, Partition& cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size(); ++w) {
            const Bits splitter = cells[w];
            Partition next;
            next.reserve(cells.size() + 4);
            for (Bits cell : cells) {
                if (popcount(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                // counts are < 65; bucket by count in ascending order
                std::array<Bits, 65> buckets{};
                Bits used = 0;  // which counts occur (counts <= 64 fit in a bitmask except 64)
                bool has64 = false;
                for_each_bit(cell, [&](int v) {
                    int c = popcount(g.neighbors(v) & splitter);
                    buckets[c] |= bit(v);
                    if (c == 64)
                        has64 = true;
                    else
                        used |= bit(c);
                });
                for_each_bit(used, [&](int c) { next.push_back(buckets[c]); });
                if (has64)
                    next.push_back(buckets[64]);
            }
            if (next.size() != cells.size()) {
                cells = std::move(next);
                changed = true;
            }
        }
    }
}

using Certificate = std::vector<Bits>;

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    void run()
    {
        Partition start{g_.vertices()};
        std::vector<int> prefix;
        search(start, prefix);
    }

    const std::vector<int>& best_lab() const { return best_lab_; }
    const Certificate& best_cert() const { return best_cert_; }

private:
    static constexpr std::size_t kMaxAutomorphisms = 128;

    bool twins(int u, int v) const
    {
        return (g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u));
    }

    // Union of orbits of the known automorphisms fixing `prefix` pointwise.
    std::vector<int> orbits(const std::vector<int>& prefix) const
    {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& a : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return a[p] == p; });
            if (!fixes)
                continue;
            for (int v = 0; v < n_; ++v) {
                int x = find(v);
                int y = find(a[v]);
                if (x != y)
                    parent[std::max(x, y)] = std::min(x, y);
            }
        }
        for (int v = 0; v < n_; ++v)
            parent[v] = find(v);
        return parent;
    }

    void leaf(const Partition& cells)
    {
        std::vector<int> lab(n_);
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) {
            lab[i] = lowest(cells[i]);
            pos[lab[i]] = i;
        }
        Certificate cert(n_);
        for (int i = 0; i < n_; ++i) {
            Bits row = 0;
            for_each_bit(g_.neighbors(lab[i]), [&](int v) { row |= bit(pos[v]); });
            cert[i] = row;
        }
        if (best_lab_.empty() || cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_lab_ = std::move(lab);
        } else if (cert == best_cert_ && autos_.size() < kMaxAutomorphisms) {
            std::vector<int> a(n_);
            for (int i = 0; i < n_; ++i)
                a[best_lab_[i]] = lab[i];
            autos_.push_back(std::move(a));
        }
    }

    void search(Partition cells, std::vector<int>& prefix)
    {
        refine(g_, cells);
        if (static_cast<int>(cells.size()) == n_) {
            leaf(cells);
            return;
        }
        std::size_t target = 0;
        int target_size = n_ + 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            int s = popcount(cells[i]);
            if (s > 1 && s < target_size) {
                target = i;
                target_size = s;
            }
        }
        const Bits cell = cells[target];
        std::vector<int> tried;
        for_each_bit(cell, [&](int v) {
            for (int u : tried)
                if (twins(u, v))
                    return;
            if (!autos_.empty() && !tried.empty()) {
                auto orb = orbits(prefix);
                for (int u : tried)
                    if (orb[u] == orb[v])
                        return;
            }
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i == target) {
                    child.push_back(bit(v));
                    child.push_back(cell & ~bit(v));
                } else {
                    child.push_back(cells[i]);
                }
            }
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
            tried.push_back(v);
        });
    }

    const Graph& g_;
    int n_;
    std::vector<int> best_lab_;
    Certificate best_cert_;
    std::vector<std::vector<int>> autos_;
};

std::string pack(int n, const auto& has_edge)
{
    std::string bytes;
    bytes.push_back(static_cast<char>(n));
    unsigned acc = 0;
    int filled = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            acc = (acc << 1) | (has_edge(i, j) ? 1u : 0u);
            if (++filled == 8) {
                bytes.push_back(static_cast<char>(acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        bytes.push_back(static_cast<char>(acc << (8 - filled)));
    return bytes;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g)
{
    CanonSearch s(g);
    s.run();
    std::vector<int> out(g.order());
    const auto& lab = s.best_lab();
    for (int i = 0; i < g.order(); ++i)
        out[lab[i]] = i;
    return out;
}

CanonKey canonical_key(const Graph& g)
{
    CanonSearch s(g);
    s.run();
    const auto& cert = s.best_cert();
    return CanonKey(pack(g.order(), [&](int i, int j) { return ((cert[i] >> j) & 1) != 0; }));
}

CanonKey labeled_key(const Graph& g)
{
    return CanonKey(pack(g.order(), [&](int i, int j) { return ((g.neighbors(i) >> j) & 1) != 0; }));
}

Graph CanonKey::to_graph() const
{
    if (bytes_.empty())
        throw GraphError("empty canonical key");
    int n = static_cast<unsigned char>(bytes_[0]);
    Graph g = Graph::empty(n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            auto byte = static_cast<unsigned char>(bytes_.at(1 + k / 8));
            if ((byte >> (7 - k % 8)) & 1)
                g = g.with_edge(i, j);
        }
    }
    return g;
}

}  // namespace satgame
