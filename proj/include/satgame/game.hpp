#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "satgame/family.hpp"
#include "satgame/graph.hpp"

namespace satgame {

enum class Player : std::uint8_t { Prolonger, Shortener };
enum class Variant : std::uint8_t { Standard, ProlongerMayPass };

inline Player opponent(Player p) { return p == Player::Prolonger ? Player::Shortener : Player::Prolonger; }
std::string to_string(Player p);      // "P" / "S"
std::string to_string(Variant v);     // "standard" / "pass"
Player parse_player(std::string_view text);
Variant parse_variant(std::string_view text);

struct Action {
    bool is_pass = false;
    Move move;

    static Action pass() { return Action{true, {}}; }
    static Action edge(int u, int v) { return Action{false, Move(u, v)}; }
    static Action edge(Move m) { return Action{false, m}; }
    static Action parse(std::string_view text);

    std::string to_string() const { return is_pass ? "pass" : move.to_string(); }
    bool operator==(const Action&) const = default;
};

class IllegalAction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GameState {
public:
    GameState(Graph graph, Player to_move, ForbiddenFamily family, Variant variant, Player first_mover);
    static GameState initial(int n, ForbiddenFamily family, Variant variant, Player first_mover);

    const Graph& graph() const { return graph_; }
    Player to_move() const { return to_move_; }
    const ForbiddenFamily& family() const { return family_; }
    Variant variant() const { return variant_; }
    Player first_mover() const { return first_mover_; }

    bool is_terminal() const { return !has_legal_move(graph_, family_); }
    std::vector<Move> legal_moves() const { return satgame::legal_moves(graph_, family_); }
    // Legal edges in order, then Pass when the mover may pass.
    std::vector<Action> legal_actions() const;
    bool may_pass() const;
    bool is_legal(const Action& a) const;

    /// Throws IllegalAction with a state dump when `a` is not legal.
    GameState apply(const Action& a) const;

    std::string describe() const;

private:
    Graph graph_;
    Player to_move_;
    ForbiddenFamily family_;
    Variant variant_;
    Player first_mover_;
};

/// A decision rule for one side. `choose` must be a pure function of the
/// state (seeded strategies fold their seed into it).
struct Strategy {
    std::string name;
    std::function<Action(const GameState&)> choose;

    Action operator()(const GameState& s) const { return choose(s); }
};

struct PlayedAction {
    Player player;
    Action action;
    bool operator==(const PlayedAction&) const = default;
};

struct GameRecord {
    int n = 0;
    ForbiddenFamily family = ForbiddenFamily::path(4);
    Variant variant = Variant::Standard;
    Player first_mover = Player::Prolonger;
    std::vector<PlayedAction> actions;
    Graph terminal = Graph::empty(1);
    int score = 0;

    // Graphs before the first action and after each action.
    std::vector<Graph> replay() const;

    std::string to_json() const;
    static GameRecord from_json(std::string_view line);
};

GameRecord play(int n, const ForbiddenFamily& family, Variant variant, Player first_mover,
                const Strategy& prolonger, const Strategy& shortener);

}  // namespace satgame
