#pragma once

#include <optional>
#include <vector>

#include "satgame/graph.hpp"

namespace satgame {

/// Lexicographically least Hamiltonian path of the subgraph induced by
/// `component`, or nullopt when none exists.
std::optional<std::vector<int>> hamiltonian_path(const Graph& g, Bits component);

/// Set of vertices of `component` at which some Hamiltonian path of the
/// induced subgraph starts (equivalently ends).
Bits hamiltonian_endpoints(const Graph& g, Bits component);

/// True iff every vertex of the connected `component` starts a Hamiltonian
/// path of it. Throws GraphError when `component` is not connected.
bool everywhere_traceable(const Graph& g, Bits component);

bool is_connected(const Graph& g, Bits mask);

}  // namespace satgame
