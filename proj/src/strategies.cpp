#include "satgame/strategies.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <tuple>

#include "satgame/canon.hpp"
#include "satgame/hamiltonian.hpp"
#include "satgame/shapes.hpp"
#include "satgame/solver.hpp"

namespace satgame {

namespace {

std::vector<int> members(Bits b)
{
    std::vector<int> out;
    for_each_bit(b, [&](int v) { out.push_back(v); });
    return out;
}

// Every edge between `from` and `to` (as vertex sets).
void add_cross(std::vector<Move>& out, Bits from, Bits to)
{
    for_each_bit(from, [&](int x) {
        for_each_bit(to & ~bit(x), [&](int y) { out.emplace_back(x, y); });
    });
}

struct Layout {
    std::vector<Shape> shapes;
    Bits isolated = 0;

    explicit Layout(const Graph& g) : shapes(component_shapes(g)), isolated(g.isolated_vertices()) {}

    template <typename Pred>
    std::vector<const Shape*> select(Pred&& pred) const
    {
        std::vector<const Shape*> out;
        for (const auto& s : shapes)
            if (pred(s))
                out.push_back(&s);
        return out;
    }
};

Bits leaves_of(const Graph& g, const Shape& s)
{
    Bits out = 0;
    for_each_bit(s.members, [&](int v) {
        if (g.degree(v) == 1)
            out |= bit(v);
    });
    return out;
}

// Two isolated vertices with the least labels.
std::optional<Move> isolated_edge(Bits isolated)
{
    if (popcount(isolated) < 2)
        return std::nullopt;
    int a = lowest(isolated);
    int b = lowest(isolated & (isolated - 1));
    return Move(a, b);
}

std::optional<Action> first_rule(const GameState& s, std::vector<Move> candidates)
{
    if (auto m = least_legal_among(s, candidates))
        return Action::edge(*m);
    return std::nullopt;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h)
{
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

std::optional<Move> least_legal_among(const GameState& s, std::span<const Move> candidates)
{
    std::optional<Move> best;
    for (Move m : candidates) {
        if (best && !(m < *best))
            continue;
        if (s.is_legal(Action::edge(m)))
            best = m;
    }
    return best;
}

Action least_legal(const GameState& s)
{
    const Graph& g = s.graph();
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v) && !creates_forbidden(g, s.family(), Move(u, v)))
                return Action::edge(u, v);
    return Action::pass();
}

Action prolonger_traceable(const GameState& s)
{
    const Graph& g = s.graph();
    for (const auto& c : g.components().list) {
        if (c.size <= 2 || everywhere_traceable(g, c.members))
            continue;
        auto path = hamiltonian_path(g, c.members);
        if (!path)
            continue;
        Action close = Action::edge(path->front(), path->back());
        if (s.is_legal(close))
            return close;
    }
    if (s.may_pass())
        return Action::pass();
    return least_legal(s);
}

Action shortener_p4(const GameState& s)
{
    const Graph& g = s.graph();
    Layout lay(g);
    auto k12 = lay.select([](const Shape& sh) { return sh.is_k12(); });

    // (i) K_{1,2} -> K_{1,3}
    std::vector<Move> cand;
    for (const auto* sh : k12)
        add_cross(cand, bit(sh->hub), lay.isolated);
    if (auto a = first_rule(s, cand))
        return *a;

    // (ii) isolated edge
    if (auto m = isolated_edge(lay.isolated); m && s.is_legal(Action::edge(*m)))
        return Action::edge(*m);

    // (iii) attach an isolated vertex to a star centre
    cand.clear();
    for (const auto& sh : lay.shapes) {
        if (sh.kind == ShapeKind::IsolatedEdge)
            add_cross(cand, sh.members, lay.isolated);
        else if (sh.kind == ShapeKind::Star)
            add_cross(cand, bit(sh.hub), lay.isolated);
    }
    if (auto a = first_rule(s, cand))
        return *a;

    // (iv) K_{1,2} -> K_3
    cand.clear();
    for (const auto* sh : k12) {
        Bits l = leaves_of(g, *sh);
        cand.emplace_back(lowest(l), lowest(l & (l - 1)));
    }
    if (auto a = first_rule(s, cand))
        return *a;

    return least_legal(s);
}

Action prolonger_p4(const GameState& s)
{
    const Graph& g = s.graph();
    Layout lay(g);

    // (i) complete a triangle from a K_{1,2}
    std::vector<Move> cand;
    for (const auto& sh : lay.shapes) {
        if (sh.is_k12()) {
            Bits l = leaves_of(g, sh);
            cand.emplace_back(lowest(l), lowest(l & (l - 1)));
        }
    }
    if (auto a = first_rule(s, cand))
        return *a;

    // (ii) isolated edge + isolated vertex -> K_{1,2}
    cand.clear();
    for (const auto& sh : lay.shapes)
        if (sh.kind == ShapeKind::IsolatedEdge)
            add_cross(cand, sh.members, lay.isolated);
    if (auto a = first_rule(s, cand))
        return *a;

    // (iii) extend a star K_{1,m}, m >= 2, at its centre
    cand.clear();
    for (const auto& sh : lay.shapes)
        if (sh.kind == ShapeKind::Star)
            add_cross(cand, bit(sh.hub), lay.isolated);
    if (auto a = first_rule(s, cand))
        return *a;

    // (iv) isolated edge
    if (auto m = isolated_edge(lay.isolated); m && s.is_legal(Action::edge(*m)))
        return Action::edge(*m);

    return least_legal(s);
}

Action shortener_p5(const GameState& s)
{
    const Graph& g = s.graph();
    Layout lay(g);
    auto k2 = lay.select([](const Shape& sh) { return sh.kind == ShapeKind::IsolatedEdge; });
    std::vector<Move> cand;

    // (i) no isolated vertices: two isolated edges -> P_4
    if (lay.isolated == 0) {
        for (std::size_t i = 0; i < k2.size(); ++i)
            for (std::size_t j = i + 1; j < k2.size(); ++j)
                add_cross(cand, k2[i]->members, k2[j]->members);
        if (auto a = first_rule(s, cand))
            return *a;
    }

    // (ii) D_{1,1} -> D_{1,2}, K_{1,3} -> D_{1,2}, T_1 -> T_2
    cand.clear();
    for (const auto& sh : lay.shapes) {
        if (sh.kind == ShapeKind::DoubleStar && sh.a == 1 && sh.b == 1)
            add_cross(cand, bit(sh.hub) | bit(sh.hub2), lay.isolated);
        else if (sh.kind == ShapeKind::Star && sh.a == 3)
            add_cross(cand, leaves_of(g, sh), lay.isolated);
        else if (sh.kind == ShapeKind::PendantTriangle && sh.a == 1)
            add_cross(cand, bit(sh.hub), lay.isolated);
    }
    if (auto a = first_rule(s, cand))
        return *a;

    // (iii) isolated edge -> K_{1,2}
    cand.clear();
    for (const auto* sh : k2)
        add_cross(cand, sh->members, lay.isolated);
    if (auto a = first_rule(s, cand))
        return *a;

    // (iv) attach an isolated vertex to a component on >= 5 vertices
    cand.clear();
    for (const auto& sh : lay.shapes)
        if (sh.size >= 5)
            add_cross(cand, sh.members, lay.isolated);
    if (auto a = first_rule(s, cand))
        return *a;

    // (v) isolated edge
    if (auto m = isolated_edge(lay.isolated); m && s.is_legal(Action::edge(*m)))
        return Action::edge(*m);

    // (vi) two K_{1,2} -> D_{2,2}
    cand.clear();
    auto k12 = lay.select([](const Shape& sh) { return sh.is_k12(); });
    for (std::size_t i = 0; i < k12.size(); ++i)
        for (std::size_t j = i + 1; j < k12.size(); ++j)
            cand.emplace_back(k12[i]->hub, k12[j]->hub);
    if (auto a = first_rule(s, cand))
        return *a;

    return least_legal(s);
}

Action prolonger_p5(const GameState& s)
{
    const Graph& g = s.graph();
    Layout lay(g);
    std::vector<Move> cand;

    // (i) D_{1,2} -> T_2, K_{1,3} -> T_1
    for (const auto& sh : lay.shapes) {
        if (sh.kind == ShapeKind::DoubleStar && sh.a == 1 && sh.b == 2) {
            // the single pendant at hub closes a triangle with hub2
            Bits pendant = g.neighbors(sh.hub) & ~bit(sh.hub2);
            cand.emplace_back(lowest(pendant), sh.hub2);
        } else if (sh.kind == ShapeKind::Star && sh.a == 3) {
            auto l = members(leaves_of(g, sh));
            for (std::size_t i = 0; i < l.size(); ++i)
                for (std::size_t j = i + 1; j < l.size(); ++j)
                    cand.emplace_back(l[i], l[j]);
        }
    }
    if (auto a = first_rule(s, cand))
        return *a;

    // (ii) complete a triangle in a triangle-free component
    cand.clear();
    for (const auto& sh : lay.shapes) {
        if (sh.size < 3 || sh.has_triangle)
            continue;
        for_each_bit(sh.members, [&](int x) {
            for_each_bit(sh.members & ~(bit(x + 1) - 1), [&](int y) {
                if (!g.has_edge(x, y) && (g.neighbors(x) & g.neighbors(y)))
                    cand.emplace_back(x, y);
            });
        });
    }
    if (auto a = first_rule(s, cand))
        return *a;

    // (iii) two isolated edges -> P_4
    cand.clear();
    auto k2 = lay.select([](const Shape& sh) { return sh.kind == ShapeKind::IsolatedEdge; });
    for (std::size_t i = 0; i < k2.size(); ++i)
        for (std::size_t j = i + 1; j < k2.size(); ++j)
            add_cross(cand, k2[i]->members, k2[j]->members);
    if (auto a = first_rule(s, cand))
        return *a;

    // (iv) isolated edge + isolated vertex -> K_{1,2}
    cand.clear();
    for (const auto* sh : k2)
        add_cross(cand, sh->members, lay.isolated);
    if (auto a = first_rule(s, cand))
        return *a;

    // (v) isolated edge
    if (auto m = isolated_edge(lay.isolated); m && s.is_legal(Action::edge(*m)))
        return Action::edge(*m);

    // (vi) least legal edge that does not grow a star into a larger star
    auto grows_star = [&](Move m) {
        Graph h = g.with_edge(m.u, m.v);
        auto comps = h.components();
        Shape merged = classify_component(h, comps.of(m.u));
        if (!merged.is_star_like())
            return false;
        return g.degree(m.u) > 0 || g.degree(m.v) > 0;
    };
    for (Move m : s.legal_moves())
        if (!grows_star(m))
            return Action::edge(m);
    return least_legal(s);
}

Action prolonger_trees(const GameState& s)
{
    const Graph& g = s.graph();
    const int k = s.family().param();
    auto comps = g.components();
    int best_total = -1;
    Move best;
    for (std::size_t i = 0; i < comps.list.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.list.size(); ++j) {
            int total = comps.list[i].size + comps.list[j].size;
            if (total <= k - 1 && total > best_total) {
                best_total = total;
                best = Move(comps.list[i].id, comps.list[j].id);
            }
        }
    }
    if (best_total > 0 && s.is_legal(Action::edge(best)))
        return Action::edge(best);
    return least_legal(s);
}

Action prolonger_star_lex(const GameState& s)
{
    const Graph& g = s.graph();
    std::optional<std::tuple<int, int, int, int>> best;
    for (Move m : s.legal_moves()) {
        int du = g.degree(m.u);
        int dv = g.degree(m.v);
        auto key = std::make_tuple(std::min(du, dv), std::max(du, dv), m.u, m.v);
        if (!best || key < *best)
            best = key;
    }
    if (!best)
        return least_legal(s);
    return Action::edge(std::get<2>(*best), std::get<3>(*best));
}

Action random_move(const GameState& s, std::uint64_t seed)
{
    auto moves = s.legal_moves();
    if (moves.empty())
        return Action::pass();
    std::uint64_t h = fnv1a(labeled_key(s.graph()).bytes(), 14695981039346656037ULL ^ seed);
    h = fnv1a(to_string(s.to_move()), h);
    std::mt19937_64 rng(h);
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    return Action::edge(moves[pick(rng)]);
}

namespace {

Action greedy_component(const GameState& s, bool maximise)
{
    const Graph& g = s.graph();
    auto comps = g.components();
    int largest = 0;
    for (const auto& c : comps.list)
        largest = std::max(largest, c.size);
    std::optional<Move> best;
    int best_size = 0;
    for (Move m : s.legal_moves()) {
        int merged = comps.index[m.u] == comps.index[m.v] ? comps.of(m.u).size
                                                          : comps.of(m.u).size + comps.of(m.v).size;
        int size = std::max(largest, merged);
        if (!best || (maximise ? size > best_size : size < best_size)) {
            best = m;
            best_size = size;
        }
    }
    return best ? Action::edge(*best) : Action::pass();
}

}  // namespace

Action greedy_min_component(const GameState& s) { return greedy_component(s, false); }

Action greedy_max_component(const GameState& s) { return greedy_component(s, true); }

Strategy strategy_by_name(std::string_view name)
{
    auto make = [&](Action (*fn)(const GameState&)) {
        return Strategy{std::string(name), [fn](const GameState& s) { return fn(s); }};
    };
    if (name == "traceable")
        return make(prolonger_traceable);
    if (name == "s-p4")
        return make(shortener_p4);
    if (name == "p-p4")
        return make(prolonger_p4);
    if (name == "s-p5")
        return make(shortener_p5);
    if (name == "p-p5")
        return make(prolonger_p5);
    if (name == "p-trees")
        return make(prolonger_trees);
    if (name == "p-star")
        return make(prolonger_star_lex);
    if (name == "greedy-min")
        return make(greedy_min_component);
    if (name == "greedy-max")
        return make(greedy_max_component);
    if (name == "optimal")
        return optimal_strategy();
    if (name.starts_with("random:")) {
        std::string_view digits = name.substr(7);
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw std::invalid_argument("bad seed in strategy '" + std::string(name) + "'");
        return Strategy{std::string(name), [seed](const GameState& s) { return random_move(s, seed); }};
    }
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

}  // namespace satgame
