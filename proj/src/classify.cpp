#include "satgame/analysis.hpp"

namespace satgame {

std::string SaturatedClass::describe() const
{
    std::string out;
    for (const auto& s : components) {
        if (!out.empty())
            out += "+";
        out += s.label();
    }
    return out;
}

std::optional<SaturatedClass> classify_p4_saturated(const Graph& g)
{
    SaturatedClass cls{component_shapes(g)};
    int isolated = 0;
    bool only_triangles = true;
    for (const auto& s : cls.components) {
        switch (s.kind) {
        case ShapeKind::IsolatedVertex:
            ++isolated;
            break;
        case ShapeKind::Triangle:
            break;
        case ShapeKind::IsolatedEdge:
            only_triangles = false;
            break;
        case ShapeKind::Star:
            if (s.a < 3)
                return std::nullopt;
            only_triangles = false;
            break;
        default:
            return std::nullopt;
        }
    }
    if (isolated == 0 || (isolated == 1 && only_triangles))
        return cls;
    return std::nullopt;
}

std::optional<SaturatedClass> classify_p5_saturated(const Graph& g)
{
    SaturatedClass cls{component_shapes(g)};
    int isolated = 0;
    int edges = 0;
    bool only_k4 = true;
    for (const auto& s : cls.components) {
        switch (s.kind) {
        case ShapeKind::IsolatedVertex:
            ++isolated;
            break;
        case ShapeKind::IsolatedEdge:
            ++edges;
            only_k4 = false;
            break;
        case ShapeKind::Clique:
            if (s.a != 4)
                return std::nullopt;
            break;
        case ShapeKind::Triangle:
            only_k4 = false;
            break;
        case ShapeKind::PendantTriangle:
        case ShapeKind::DoubleStar:
            if (s.a < 2)
                return std::nullopt;
            only_k4 = false;
            break;
        default:
            return std::nullopt;
        }
    }
    if (isolated == 0 && edges <= 1)
        return cls;
    if (isolated == 1 && only_k4)
        return cls;
    return std::nullopt;
}

bool is_standalone(const Graph& g, Bits component)
{
    if (popcount(component) < 2)
        return false;
    bool all = true;
    for_each_bit(component, [&](int v) {
        bool starts_p3 = false;
        for_each_bit(g.neighbors(v), [&](int w) {
            if (g.neighbors(w) & ~bit(v))
                starts_p3 = true;
        });
        all = all && starts_p3;
    });
    return all;
}

}  // namespace satgame
