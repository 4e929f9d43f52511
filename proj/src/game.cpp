#include "satgame/game.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace satgame {

std::string to_string(Player p) { return p == Player::Prolonger ? "P" : "S"; }

std::string to_string(Variant v) { return v == Variant::Standard ? "standard" : "pass"; }

Player parse_player(std::string_view text)
{
    if (text == "P" || text == "prolonger")
        return Player::Prolonger;
    if (text == "S" || text == "shortener")
        return Player::Shortener;
    throw std::invalid_argument("unknown player '" + std::string(text) + "'");
}

Variant parse_variant(std::string_view text)
{
    if (text == "standard")
        return Variant::Standard;
    if (text == "pass")
        return Variant::ProlongerMayPass;
    throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

Action Action::parse(std::string_view text)
{
    if (text == "pass")
        return pass();
    auto dash = text.find('-');
    if (dash == std::string_view::npos)
        throw std::invalid_argument("bad action '" + std::string(text) + "'");
    int u = 0;
    int v = 0;
    auto r1 = std::from_chars(text.data(), text.data() + dash, u);
    auto r2 = std::from_chars(text.data() + dash + 1, text.data() + text.size(), v);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != text.data() + dash ||
        r2.ptr != text.data() + text.size())
        throw std::invalid_argument("bad action '" + std::string(text) + "'");
    return edge(u, v);
}

GameState::GameState(Graph graph, Player to_move, ForbiddenFamily family, Variant variant, Player first_mover)
    : graph_(std::move(graph)), to_move_(to_move), family_(std::move(family)), variant_(variant),
      first_mover_(first_mover)
{
    if (!is_free(graph_, family_))
        throw IllegalAction("state graph is not " + family_.to_string() + "-free");
}

GameState GameState::initial(int n, ForbiddenFamily family, Variant variant, Player first_mover)
{
    return GameState(Graph::empty(n), first_mover, std::move(family), variant, first_mover);
}

bool GameState::may_pass() const
{
    return variant_ == Variant::ProlongerMayPass && to_move_ == Player::Prolonger && !is_terminal();
}

std::vector<Action> GameState::legal_actions() const
{
    std::vector<Action> out;
    for (Move m : legal_moves())
        out.push_back(Action::edge(m));
    if (!out.empty() && variant_ == Variant::ProlongerMayPass && to_move_ == Player::Prolonger)
        out.push_back(Action::pass());
    return out;
}

bool GameState::is_legal(const Action& a) const
{
    if (a.is_pass)
        return may_pass();
    const int n = graph_.order();
    if (a.move.u < 0 || a.move.v >= n || a.move.u == a.move.v)
        return false;
    if (graph_.has_edge(a.move.u, a.move.v))
        return false;
    return !creates_forbidden(graph_, family_, a.move);
}

GameState GameState::apply(const Action& a) const
{
    if (a.is_pass) {
        if (to_move_ == Player::Shortener)
            throw IllegalAction("Shortener may not pass\n" + describe());
        if (variant_ == Variant::Standard)
            throw IllegalAction("passing is not allowed in the standard game\n" + describe());
        if (is_terminal())
            throw IllegalAction("game is over\n" + describe());
        GameState next = *this;
        next.to_move_ = opponent(to_move_);
        return next;
    }
    if (!is_legal(a))
        throw IllegalAction("illegal edge " + a.to_string() + "\n" + describe());
    GameState next = *this;
    next.graph_ = graph_.with_edge(a.move.u, a.move.v);
    next.to_move_ = opponent(to_move_);
    return next;
}

std::string GameState::describe() const
{
    std::ostringstream os;
    os << "family=" << family_.to_string() << " variant=" << to_string(variant_)
       << " to_move=" << to_string(to_move_) << " graph=" << graph_.to_edge_list()
       << " graph6=" << graph_.to_graph6();
    return os.str();
}

std::vector<Graph> GameRecord::replay() const
{
    std::vector<Graph> out{Graph::empty(n)};
    for (const auto& pa : actions) {
        if (pa.action.is_pass)
            out.push_back(out.back());
        else
            out.push_back(out.back().with_edge(pa.action.move.u, pa.action.move.v));
    }
    return out;
}

std::string GameRecord::to_json() const
{
    nlohmann::ordered_json j;
    j["n"] = n;
    j["family"] = family.to_string();
    j["variant"] = satgame::to_string(variant);
    j["first"] = satgame::to_string(first_mover);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& pa : actions) {
        nlohmann::ordered_json a;
        a["player"] = satgame::to_string(pa.player);
        a["action"] = pa.action.to_string();
        arr.push_back(std::move(a));
    }
    j["actions"] = std::move(arr);
    j["score"] = score;
    j["terminal_graph6"] = terminal.to_graph6();
    return j.dump();
}

GameRecord GameRecord::from_json(std::string_view line)
{
    auto j = nlohmann::json::parse(line);
    GameRecord rec;
    rec.n = j.at("n").get<int>();
    rec.family = ForbiddenFamily::parse(j.at("family").get<std::string>());
    rec.variant = parse_variant(j.at("variant").get<std::string>());
    rec.first_mover = parse_player(j.at("first").get<std::string>());
    for (const auto& a : j.at("actions"))
        rec.actions.push_back({parse_player(a.at("player").get<std::string>()),
                               Action::parse(a.at("action").get<std::string>())});
    rec.score = j.at("score").get<int>();
    rec.terminal = Graph::from_graph6(j.at("terminal_graph6").get<std::string>());
    return rec;
}

GameRecord play(int n, const ForbiddenFamily& family, Variant variant, Player first_mover,
                const Strategy& prolonger, const Strategy& shortener)
{
    GameState state = GameState::initial(n, family, variant, first_mover);
    GameRecord rec;
    rec.n = n;
    rec.family = family;
    rec.variant = variant;
    rec.first_mover = first_mover;
    while (!state.is_terminal()) {
        const Strategy& strat = state.to_move() == Player::Prolonger ? prolonger : shortener;
        Action a = strat(state);
        if (!state.is_legal(a))
            throw IllegalAction("strategy '" + strat.name + "' chose illegal action " + a.to_string() + "\n" +
                                state.describe());
        rec.actions.push_back({state.to_move(), a});
        state = state.apply(a);
    }
    rec.terminal = state.graph();
    rec.score = state.graph().size();
    return rec;
}

}  // namespace satgame
