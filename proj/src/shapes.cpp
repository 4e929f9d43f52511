#include "satgame/shapes.hpp"

namespace satgame {

bool contains_triangle(const Graph& g, Bits mask)
{
    bool found = false;
    for_each_bit(mask, [&](int u) {
        if (found)
            return;
        Bits nu = g.neighbors(u) & mask;
        for_each_bit(nu & ~(bit(u + 1) - 1), [&](int v) {
            if (g.neighbors(v) & nu)
                found = true;
        });
    });
    return found;
}

Shape classify_component(const Graph& g, const Component& c)
{
    Shape s;
    s.members = c.members;
    s.id = c.id;
    s.size = c.size;
    s.has_triangle = contains_triangle(g, c.members);

    if (c.size == 1) {
        s.kind = ShapeKind::IsolatedVertex;
        return s;
    }
    if (c.size == 2) {
        s.kind = ShapeKind::IsolatedEdge;
        s.hub = c.id;
        return s;
    }
    if (c.edges == c.size * (c.size - 1) / 2) {
        s.kind = c.size == 3 ? ShapeKind::Triangle : ShapeKind::Clique;
        s.a = c.size;
        return s;
    }

    int universal = -1;
    Bits inner = 0;  // non-leaf vertices
    for_each_bit(c.members, [&](int v) {
        int d = g.degree(v);
        if (d == c.size - 1 && universal < 0)
            universal = v;
        if (d >= 2)
            inner |= bit(v);
    });

    if (c.edges == c.size - 1) {
        if (universal >= 0) {
            s.kind = ShapeKind::Star;
            s.a = c.size - 1;
            s.hub = universal;
            return s;
        }
        if (popcount(inner) == 2) {
            int x = lowest(inner);
            int y = lowest(inner & (inner - 1));
            if (g.neighbors(x) & bit(y)) {
                int kx = g.degree(x) - 1;
                int ky = g.degree(y) - 1;
                s.kind = ShapeKind::DoubleStar;
                if (ky < kx) {
                    std::swap(x, y);
                    std::swap(kx, ky);
                }
                s.a = kx;
                s.b = ky;
                s.hub = x;
                s.hub2 = y;
                return s;
            }
        }
        return s;
    }

    if (c.edges == c.size && universal >= 0 && s.has_triangle) {
        s.kind = ShapeKind::PendantTriangle;
        s.a = c.size - 3;
        s.hub = universal;
        return s;
    }
    return s;
}

std::vector<Shape> component_shapes(const Graph& g)
{
    std::vector<Shape> out;
    for (const auto& c : g.components().list)
        out.push_back(classify_component(g, c));
    return out;
}

std::string Shape::label() const
{
    switch (kind) {
    case ShapeKind::IsolatedVertex:
        return "K1";
    case ShapeKind::IsolatedEdge:
        return "K2";
    case ShapeKind::Star:
        return "K1," + std::to_string(a);
    case ShapeKind::DoubleStar:
        return "D" + std::to_string(a) + "," + std::to_string(b);
    case ShapeKind::Triangle:
        return "K3";
    case ShapeKind::PendantTriangle:
        return "T" + std::to_string(a);
    case ShapeKind::Clique:
        return "K" + std::to_string(a);
    case ShapeKind::Other:
        break;
    }
    return "other";
}

}  // namespace satgame
