#pragma once

#include <string>
#include <vector>

#include "satgame/graph.hpp"

namespace satgame {

/// Component shapes that appear in P4/P5-saturation play.
///   Star:        K_{1,m}, m >= 2 (K_{1,2} is the 3-vertex path)
///   DoubleStar:  D_{k,l}, central edge with k and l pendants, 1 <= k <= l
///   Triangle:    T_0
///   PendantTriangle: T_j, triangle with j >= 1 pendants on one vertex
enum class ShapeKind {
    IsolatedVertex,
    IsolatedEdge,
    Star,
    DoubleStar,
    Triangle,
    PendantTriangle,
    Clique,  // K_j, j >= 4
    Other,
};

struct Shape {
    ShapeKind kind = ShapeKind::Other;
    Bits members = 0;
    int id = 0;       // smallest member
    int size = 0;
    int a = 0;        // Star: leaves; DoubleStar: k; PendantTriangle: pendants; Clique: order
    int b = 0;        // DoubleStar: l
    int hub = -1;     // Star centre, PendantTriangle hub, DoubleStar centre carrying k pendants
    int hub2 = -1;    // DoubleStar centre carrying l pendants
    bool has_triangle = false;

    bool is_star_like() const { return kind == ShapeKind::IsolatedEdge || kind == ShapeKind::Star; }
    bool is_k12() const { return kind == ShapeKind::Star && a == 2; }
    std::string label() const;
};

Shape classify_component(const Graph& g, const Component& c);
std::vector<Shape> component_shapes(const Graph& g);

bool contains_triangle(const Graph& g, Bits mask);

}  // namespace satgame
