#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "satgame/game.hpp"

namespace satgame {

// Named strategies. Each returns a legal action for any non-terminal state;
// when none of its rules applies it falls back to the least legal edge.

/// Keep every component everywhere traceable: close the Hamiltonian path of
/// a component that is not, otherwise pass (least legal edge when passing
/// is not allowed).
Action prolonger_traceable(const GameState& s);

Action shortener_p4(const GameState& s);
Action prolonger_p4(const GameState& s);
Action shortener_p5(const GameState& s);
Action prolonger_p5(const GameState& s);

/// Join the two components of largest combined size not exceeding k - 1.
Action prolonger_trees(const GameState& s);

/// Least absent edge keyed by (min degree, max degree, u, v).
Action prolonger_star_lex(const GameState& s);

// Baselines.
Action random_move(const GameState& s, std::uint64_t seed);
Action greedy_min_component(const GameState& s);
Action greedy_max_component(const GameState& s);

/// Least legal edge, or Pass when there is none.
Action least_legal(const GameState& s);

/// Least candidate that is a legal move in `s`.
std::optional<Move> least_legal_among(const GameState& s, std::span<const Move> candidates);

/// Names: traceable, s-p4, p-p4, s-p5, p-p5, p-trees, p-star, random:<seed>,
/// greedy-min, greedy-max, optimal. Throws std::invalid_argument otherwise.
Strategy strategy_by_name(std::string_view name);

}  // namespace satgame
