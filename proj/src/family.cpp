#include "satgame/family.hpp"

#include <algorithm>
#include <charconv>

#include "satgame/hamiltonian.hpp"

namespace satgame {

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

int parse_param(std::string_view text, std::string_view whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw FamilyError("bad family parameter in '" + std::string(whole) + "'");
    return value;
}

}  // namespace

ForbiddenFamily ForbiddenFamily::path(int k)
{
    if (k < 2)
        throw FamilyError("path family needs k >= 2");
    return ForbiddenFamily(Kind::Path, k);
}

ForbiddenFamily ForbiddenFamily::trees(int k)
{
    if (k < 2)
        throw FamilyError("tree family needs k >= 2");
    return ForbiddenFamily(Kind::Trees, k);
}

ForbiddenFamily ForbiddenFamily::star(int leaves)
{
    if (leaves < 2)
        throw FamilyError("star family needs at least 2 leaves");
    return ForbiddenFamily(Kind::Star, leaves);
}

ForbiddenFamily ForbiddenFamily::list(std::vector<Graph> graphs)
{
    if (graphs.empty())
        throw FamilyError("explicit family needs at least one graph");
    for (const auto& h : graphs)
        if (h.size() == 0 || !is_connected(h, h.vertices()))
            throw FamilyError("explicit family members must be connected with at least one edge");
    ForbiddenFamily f(Kind::List, 0);
    f.graphs_ = std::make_shared<const std::vector<Graph>>(std::move(graphs));
    return f;
}

ForbiddenFamily ForbiddenFamily::parse(std::string_view text)
{
    auto colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    std::string_view tail = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (colon == std::string_view::npos) {
        if (head.size() >= 2 && head[0] == 'P')
            return path(parse_param(head.substr(1), text));
    } else if (head == "Pk") {
        return path(parse_param(tail, text));
    } else if (head == "Trees") {
        return trees(parse_param(tail, text));
    } else if (head == "Star") {
        return star(parse_param(tail, text));
    } else if (head == "List") {
        std::vector<Graph> graphs;
        while (!tail.empty()) {
            auto comma = tail.find(',');
            try {
                graphs.push_back(Graph::from_graph6(tail.substr(0, comma)));
            } catch (const GraphError& e) {
                throw FamilyError(std::string("bad graph in family: ") + e.what());
            }
            if (comma == std::string_view::npos)
                break;
            tail = tail.substr(comma + 1);
        }
        return list(std::move(graphs));
    }
    throw FamilyError("unknown family '" + std::string(text) + "'");
}

std::string ForbiddenFamily::to_string() const
{
    switch (kind_) {
    case Kind::Path:
        return param_ == 4 || param_ == 5 ? "P" + std::to_string(param_) : "Pk:" + std::to_string(param_);
    case Kind::Trees:
        return "Trees:" + std::to_string(param_);
    case Kind::Star:
        return "Star:" + std::to_string(param_);
    case Kind::List: {
        std::string out = "List:";
        for (std::size_t i = 0; i < graphs_->size(); ++i) {
            if (i > 0)
                out += ",";
            out += (*graphs_)[i].to_graph6();
        }
        return out;
    }
    }
    return {};
}

int ForbiddenFamily::edge_upper_bound(int n) const
{
    switch (kind_) {
    case Kind::Path:
        return std::min(choose2(n), n * (param_ - 1) / 2);
    case Kind::Trees: {
        int q = n / (param_ - 1);
        int r = n % (param_ - 1);
        return q * choose2(param_ - 1) + choose2(r);
    }
    case Kind::Star:
        return std::min(choose2(n), n * (param_ - 1) / 2);
    case Kind::List:
        return choose2(n);
    }
    return choose2(n);
}

bool operator==(const ForbiddenFamily& a, const ForbiddenFamily& b)
{
    if (a.kind_ != b.kind_ || a.param_ != b.param_)
        return false;
    return a.kind_ != ForbiddenFamily::Kind::List || *a.graphs_ == *b.graphs_;
}

namespace {

// Is there a simple path with `need` more vertices starting after `cur`?
bool extend(const Graph& g, int cur, Bits used, int need)
{
    if (need == 0)
        return true;
    Bits options = g.neighbors(cur) & ~used;
    while (options != 0) {
        int w = lowest(options);
        options &= options - 1;
        if (extend(g, w, used | bit(w), need - 1))
            return true;
    }
    return false;
}

// Paths of g + uv through uv: a left part ending at u (avoiding v) joined to
// a right part starting at v.
bool path_through(const Graph& g, int u, int v, Bits used, int cur, int len, int k)
{
    if (extend(g, v, used | bit(v), k - len - 1))
        return true;
    if (len + 1 >= k)
        return false;
    Bits options = g.neighbors(cur) & ~used & ~bit(v);
    while (options != 0) {
        int w = lowest(options);
        options &= options - 1;
        if (path_through(g, u, v, used | bit(w), w, len + 1, k))
            return true;
    }
    return false;
}

class Embedder {
public:
    Embedder(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern)
    {
        // BFS order from the highest-degree vertex keeps later vertices
        // constrained by earlier ones.
        int p = pattern.order();
        Bits placed = 0;
        while (popcount(placed) < p) {
            int root = -1;
            for (int v = 0; v < p; ++v)
                if (!(placed & bit(v)) && (root < 0 || pattern.degree(v) > pattern.degree(root)))
                    root = v;
            std::vector<int> queue{root};
            placed |= bit(root);
            for (std::size_t i = 0; i < queue.size(); ++i) {
                order_.push_back(queue[i]);
                for_each_bit(pattern.neighbors(queue[i]) & ~placed, [&](int w) {
                    placed |= bit(w);
                    queue.push_back(w);
                });
            }
        }
        image_.assign(p, -1);
    }

    bool run() { return place(0, 0); }

private:
    bool place(std::size_t i, Bits used)
    {
        if (i == order_.size())
            return true;
        int pv = order_[i];
        Bits cand = host_.vertices() & ~used;
        for_each_bit(pattern_.neighbors(pv), [&](int pw) {
            if (image_[pw] >= 0)
                cand &= host_.neighbors(image_[pw]);
        });
        int need = pattern_.degree(pv);
        while (cand != 0) {
            int hv = lowest(cand);
            cand &= cand - 1;
            if (host_.degree(hv) < need)
                continue;
            image_[pv] = hv;
            if (place(i + 1, used | bit(hv)))
                return true;
            image_[pv] = -1;
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<int> order_;
    std::vector<int> image_;
};

}  // namespace

bool has_path(const Graph& g, int k)
{
    if (k <= 1)
        return k <= g.order();
    for (const auto& c : g.components().list) {
        if (c.size < k || c.edges < k - 1)
            continue;
        bool found = false;
        for_each_bit(c.members, [&](int v) {
            if (!found && extend(g, v, bit(v), k - 1))
                found = true;
        });
        if (found)
            return true;
    }
    return false;
}

bool contains_subgraph(const Graph& host, const Graph& pattern)
{
    if (pattern.order() > host.order() || pattern.size() > host.size())
        return false;
    return Embedder(host, pattern).run();
}

bool is_free(const Graph& g, const ForbiddenFamily& family)
{
    switch (family.kind()) {
    case ForbiddenFamily::Kind::Path:
        return !has_path(g, family.param());
    case ForbiddenFamily::Kind::Trees:
        for (const auto& c : g.components().list)
            if (c.size >= family.param())
                return false;
        return true;
    case ForbiddenFamily::Kind::Star:
        return g.max_degree() <= family.param() - 1;
    case ForbiddenFamily::Kind::List:
        for (const auto& h : family.graphs())
            if (contains_subgraph(g, h))
                return false;
        return true;
    }
    return true;
}

namespace {

Bits component_of(const Graph& g, int v)
{
    Bits comp = bit(v);
    Bits frontier = comp;
    while (frontier != 0) {
        Bits next = 0;
        for_each_bit(frontier, [&](int w) { next |= g.neighbors(w); });
        frontier = next & ~comp;
        comp |= next;
    }
    return comp;
}

}  // namespace

bool creates_forbidden(const Graph& g, const ForbiddenFamily& family, Move e)
{
    if (g.has_edge(e.u, e.v))
        throw GraphError("edge " + e.to_string() + " already present");
    if (e.u == e.v)
        throw GraphError("self-loop");
    switch (family.kind()) {
    case ForbiddenFamily::Kind::Path: {
        int k = family.param();
        Bits cu = component_of(g, e.u);
        Bits merged = (cu & bit(e.v)) ? cu : cu | component_of(g, e.v);
        if (popcount(merged) < k)
            return false;
        return path_through(g, e.u, e.v, bit(e.u), e.u, 1, k);
    }
    case ForbiddenFamily::Kind::Trees: {
        Bits cu = component_of(g, e.u);
        if (cu & bit(e.v))
            return false;
        return popcount(cu) + popcount(component_of(g, e.v)) >= family.param();
    }
    case ForbiddenFamily::Kind::Star:
        return g.degree(e.u) + 1 >= family.param() || g.degree(e.v) + 1 >= family.param();
    case ForbiddenFamily::Kind::List:
        return !is_free(g.with_edge(e.u, e.v), family);
    }
    return false;
}

std::vector<Move> legal_moves(const Graph& g, const ForbiddenFamily& family)
{
    std::vector<Move> out;
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && !creates_forbidden(g, family, Move(u, v)))
                out.emplace_back(u, v);
    return out;
}

bool has_legal_move(const Graph& g, const ForbiddenFamily& family)
{
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && !creates_forbidden(g, family, Move(u, v)))
                return true;
    return false;
}

bool is_saturated(const Graph& g, const ForbiddenFamily& family)
{
    return is_free(g, family) && !has_legal_move(g, family);
}

}  // namespace satgame
