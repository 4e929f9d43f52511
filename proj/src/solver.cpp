#include "satgame/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <limits>
#include <thread>

#include "satgame/canon.hpp"

namespace satgame {

// ---------------------------------------------------------------------------
// PositionTable

namespace {

constexpr char kCacheMagic[8] = {'S', 'A', 'T', 'G', 'C', 'A', 'C', 'H'};
constexpr std::uint32_t kCacheVersion = 1;

template <typename T>
void write_pod(std::ostream& os, T value)
{
    os.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
bool read_pod(std::istream& is, T& value)
{
    return static_cast<bool>(is.read(reinterpret_cast<char*>(&value), sizeof value));
}

}  // namespace

PositionTable::PositionTable(std::size_t shards) : shards_(std::max<std::size_t>(shards, 1)) {}

PositionTable::Shard& PositionTable::shard_for(const std::string& key) const
{
    return shards_[std::hash<std::string>{}(key) % shards_.size()];
}

std::optional<int> PositionTable::find(const std::string& key) const
{
    Shard& s = shard_for(key);
    std::lock_guard lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end())
        return std::nullopt;
    return it->second;
}

void PositionTable::insert(const std::string& key, int value)
{
    Shard& s = shard_for(key);
    std::lock_guard lock(s.mu);
    s.map.emplace(key, value);
}

std::size_t PositionTable::size() const
{
    std::size_t total = 0;
    for (auto& s : shards_) {
        std::lock_guard lock(s.mu);
        total += s.map.size();
    }
    return total;
}

void PositionTable::clear()
{
    for (auto& s : shards_) {
        std::lock_guard lock(s.mu);
        s.map.clear();
    }
}

void PositionTable::save(const std::filesystem::path& path, const std::string& context) const
{
    // Sorted so equal tables produce equal files.
    std::vector<std::pair<std::string, int>> entries;
    for (auto& s : shards_) {
        std::lock_guard lock(s.mu);
        entries.insert(entries.end(), s.map.begin(), s.map.end());
    }
    std::sort(entries.begin(), entries.end());

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("cannot write cache file " + path.string());
    os.write(kCacheMagic, sizeof kCacheMagic);
    write_pod(os, kCacheVersion);
    write_pod(os, static_cast<std::uint32_t>(context.size()));
    os.write(context.data(), static_cast<std::streamsize>(context.size()));
    write_pod(os, static_cast<std::uint64_t>(entries.size()));
    for (const auto& [key, value] : entries) {
        write_pod(os, static_cast<std::uint16_t>(key.size()));
        os.write(key.data(), static_cast<std::streamsize>(key.size()));
        write_pod(os, static_cast<std::int32_t>(value));
    }
}

bool PositionTable::load(const std::filesystem::path& path, const std::string& context)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        return false;
    char magic[sizeof kCacheMagic];
    std::uint32_t version = 0;
    std::uint32_t ctx_len = 0;
    if (!is.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, kCacheMagic))
        return false;
    if (!read_pod(is, version) || version != kCacheVersion || !read_pod(is, ctx_len))
        return false;
    std::string ctx(ctx_len, '\0');
    if (!is.read(ctx.data(), ctx_len) || ctx != context)
        return false;
    std::uint64_t count = 0;
    if (!read_pod(is, count))
        return false;
    std::vector<std::pair<std::string, int>> entries;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint16_t len = 0;
        std::int32_t value = 0;
        if (!read_pod(is, len))
            return false;
        std::string key(len, '\0');
        if (!is.read(key.data(), len) || !read_pod(is, value))
            return false;
        entries.emplace_back(std::move(key), value);
    }
    for (auto& [key, value] : entries)
        insert(key, value);
    return true;
}

// ---------------------------------------------------------------------------
// Shared search budget

namespace {

class SearchBudget {
public:
    explicit SearchBudget(const SolverConfig& cfg)
        : node_limit_(cfg.node_limit), time_limit_(cfg.time_limit), start_(std::chrono::steady_clock::now())
    {
    }

    void tick()
    {
        std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit_ != 0 && n > node_limit_)
            throw SolveError(SolveError::Kind::NodeLimit, "node limit of " + std::to_string(node_limit_) + " exceeded");
        if (time_limit_.count() != 0 && (n & 255) == 0 && std::chrono::steady_clock::now() - start_ > time_limit_)
            throw SolveError(SolveError::Kind::Timeout,
                             "time limit of " + std::to_string(time_limit_.count()) + " ms exceeded");
    }

    std::uint64_t nodes() const { return nodes_.load(); }
    std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

private:
    std::uint64_t node_limit_;
    std::chrono::milliseconds time_limit_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
};

void check_cap(int n, const SolverConfig& cfg)
{
    if (n > cfg.max_vertices)
        throw SolveError(SolveError::Kind::CapExceeded,
                         "n=" + std::to_string(n) + " exceeds solver cap " + std::to_string(cfg.max_vertices));
}

Graph after(const Graph& g, const Action& a)
{
    return a.is_pass ? g : g.with_edge(a.move.u, a.move.v);
}

// Evaluate root children with `workers` threads; results land in `values`.
template <typename Eval>
void evaluate_children(std::size_t count, int workers, std::vector<int>& values, Eval&& eval)
{
    values.assign(count, 0);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            values[i] = eval(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min<int>(workers, static_cast<int>(count)); ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    values[i] = eval(i);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

int best_of(Player mover, const std::vector<int>& values)
{
    return mover == Player::Prolonger ? *std::max_element(values.begin(), values.end())
                                      : *std::min_element(values.begin(), values.end());
}

}  // namespace

struct Solver::Budget : SearchBudget {
    using SearchBudget::SearchBudget;
};

// ---------------------------------------------------------------------------
// Solver

Solver::Solver(int n, ForbiddenFamily family, Variant variant, SolverConfig config)
    : n_(n), family_(std::move(family)), variant_(variant), config_(config)
{
    check_cap(n_, config_);
    Graph::empty(n_);  // validates n
}

std::string Solver::context() const
{
    return family_.to_string() + "|" + to_string(variant_) + "|" + std::to_string(n_);
}

std::string Solver::key(const Graph& g, Player to_move) const
{
    std::string k = canonical_key(g).bytes();
    k.push_back(to_move == Player::Prolonger ? 'P' : 'S');
    k.push_back(variant_ == Variant::Standard ? 's' : 'p');
    return k;
}

// Prolonger tries component-joining edges first, Shortener edges inside a
// component first; pass (when allowed) goes last.
std::vector<Action> Solver::ordered_actions(const Graph& g, Player to_move) const
{
    auto moves = legal_moves(g, family_);
    std::vector<Action> out;
    out.reserve(moves.size() + 1);
    if (moves.empty())
        return out;
    auto comps = g.components();
    auto joins = [&](Move m) { return comps.index[m.u] != comps.index[m.v]; };
    bool joining_first = to_move == Player::Prolonger;
    for (Move m : moves)
        if (joins(m) == joining_first)
            out.push_back(Action::edge(m));
    for (Move m : moves)
        if (joins(m) != joining_first)
            out.push_back(Action::edge(m));
    if (variant_ == Variant::ProlongerMayPass && to_move == Player::Prolonger)
        out.push_back(Action::pass());
    return out;
}

int Solver::search(const Graph& g, Player to_move, Budget& budget)
{
    const std::string k = key(g, to_move);
    if (auto hit = table_.find(k))
        return *hit;
    budget.tick();

    auto actions = ordered_actions(g, to_move);
    int value = 0;
    if (actions.empty()) {
        value = g.size();
    } else if (to_move == Player::Prolonger) {
        const int ceiling = family_.edge_upper_bound(n_);
        value = std::numeric_limits<int>::min();
        for (const auto& a : actions) {
            value = std::max(value, search(after(g, a), Player::Shortener, budget));
            if (value >= ceiling)
                break;
        }
    } else {
        const int floor = g.size() + 1;
        value = std::numeric_limits<int>::max();
        for (const auto& a : actions) {
            value = std::min(value, search(after(g, a), Player::Prolonger, budget));
            if (value <= floor)
                break;
        }
    }
    table_.insert(k, value);
    return value;
}

int Solver::value(const Graph& g, Player to_move)
{
    Budget budget(config_);
    return search(g, to_move, budget);
}

SolveResult Solver::solve(Player first_mover)
{
    Budget budget(config_);
    const Graph root = Graph::empty(n_);
    auto actions = ordered_actions(root, first_mover);

    SolveResult result;
    if (actions.empty()) {
        result.score = 0;
    } else {
        std::vector<int> values;
        evaluate_children(actions.size(), config_.threads, values, [&](std::size_t i) {
            return search(after(root, actions[i]), opponent(first_mover), budget);
        });
        result.score = best_of(first_mover, values);
        table_.insert(key(root, first_mover), result.score);
    }

    // Principal variation: first action in search order achieving the value.
    Graph g = root;
    Player mover = first_mover;
    while (true) {
        auto acts = ordered_actions(g, mover);
        if (acts.empty())
            break;
        int target = search(g, mover, budget);
        for (const auto& a : acts) {
            if (search(after(g, a), opponent(mover), budget) == target) {
                result.principal_variation.push_back(a);
                g = after(g, a);
                break;
            }
        }
        mover = opponent(mover);
    }
    result.positions_expanded = budget.nodes();
    result.elapsed = budget.elapsed();
    return result;
}

SolveResult solve(int n, const ForbiddenFamily& family, Variant variant, Player first_mover,
                  const SolverConfig& config)
{
    Solver solver(n, family, variant, config);
    return solver.solve(first_mover);
}

// ---------------------------------------------------------------------------
// Best response against a scripted side

namespace {

class BestResponse {
public:
    BestResponse(int n, const ForbiddenFamily& family, Variant variant, const Strategy& fixed, Player fixed_side,
                 Player first_mover, const SolverConfig& config)
        : n_(n), family_(family), variant_(variant), fixed_(fixed), fixed_side_(fixed_side),
          first_mover_(first_mover), budget_(config)
    {
    }

    int search(const Graph& g, Player to_move)
    {
        std::string k = labeled_key(g).bytes();
        k.push_back(to_move == Player::Prolonger ? 'P' : 'S');
        if (auto it = table_.find(k); it != table_.end())
            return it->second;
        budget_.tick();

        int value = 0;
        auto actions = free_actions(g, to_move);
        if (actions.empty()) {
            value = g.size();
        } else if (to_move == fixed_side_) {
            value = search(after(g, scripted(g, to_move)), opponent(to_move));
        } else if (to_move == Player::Prolonger) {
            const int ceiling = family_.edge_upper_bound(n_);
            value = std::numeric_limits<int>::min();
            for (const auto& a : actions) {
                value = std::max(value, search(after(g, a), opponent(to_move)));
                if (value >= ceiling)
                    break;
            }
        } else {
            const int floor = g.size() + 1;
            value = std::numeric_limits<int>::max();
            for (const auto& a : actions) {
                value = std::min(value, search(after(g, a), opponent(to_move)));
                if (value <= floor)
                    break;
            }
        }
        table_.emplace(std::move(k), value);
        return value;
    }

    SolveResult run()
    {
        SolveResult result;
        Graph g = Graph::empty(n_);
        result.score = search(g, first_mover_);
        Player mover = first_mover_;
        while (true) {
            auto acts = free_actions(g, mover);
            if (acts.empty())
                break;
            Action chosen = acts.front();
            if (mover == fixed_side_) {
                chosen = scripted(g, mover);
            } else {
                int target = search(g, mover);
                for (const auto& a : acts) {
                    if (search(after(g, a), opponent(mover)) == target) {
                        chosen = a;
                        break;
                    }
                }
            }
            result.principal_variation.push_back(chosen);
            g = after(g, chosen);
            mover = opponent(mover);
        }
        result.positions_expanded = budget_.nodes();
        result.elapsed = budget_.elapsed();
        return result;
    }

private:
    std::vector<Action> free_actions(const Graph& g, Player to_move) const
    {
        std::vector<Action> out;
        for (Move m : legal_moves(g, family_))
            out.push_back(Action::edge(m));
        if (!out.empty() && variant_ == Variant::ProlongerMayPass && to_move == Player::Prolonger)
            out.push_back(Action::pass());
        return out;
    }

    Action scripted(const Graph& g, Player to_move) const
    {
        GameState state(g, to_move, family_, variant_, first_mover_);
        Action a = fixed_(state);
        if (!state.is_legal(a))
            throw IllegalAction("strategy '" + fixed_.name + "' chose illegal action " + a.to_string() + "\n" +
                                state.describe());
        return a;
    }

    int n_;
    const ForbiddenFamily& family_;
    Variant variant_;
    const Strategy& fixed_;
    Player fixed_side_;
    Player first_mover_;
    SearchBudget budget_;
    std::unordered_map<std::string, int> table_;
};

}  // namespace

SolveResult best_response(int n, const ForbiddenFamily& family, Variant variant, const Strategy& fixed,
                          Player fixed_side, Player first_mover, const SolverConfig& config)
{
    check_cap(n, config);
    Graph::empty(n);
    BestResponse br(n, family, variant, fixed, fixed_side, first_mover, config);
    return br.run();
}

// ---------------------------------------------------------------------------
// Solver-backed strategy

Strategy optimal_strategy(SolverConfig config)
{
    struct Cache {
        std::mutex mu;
        std::unordered_map<std::string, std::shared_ptr<Solver>> solvers;
    };
    auto cache = std::make_shared<Cache>();
    config.threads = 1;
    return Strategy{"optimal", [cache, config](const GameState& s) {
                        std::shared_ptr<Solver> solver;
                        {
                            std::string ctx = s.family().to_string() + "|" + to_string(s.variant()) + "|" +
                                              std::to_string(s.graph().order());
                            std::lock_guard lock(cache->mu);
                            auto& slot = cache->solvers[ctx];
                            if (!slot)
                                slot = std::make_shared<Solver>(s.graph().order(), s.family(), s.variant(), config);
                            solver = slot;
                        }
                        auto actions = s.legal_actions();
                        if (actions.empty())
                            return Action::pass();
                        const Player mover = s.to_move();
                        std::optional<Action> best;
                        int best_value = 0;
                        for (const auto& a : actions) {
                            int v = solver->value(after(s.graph(), a), opponent(mover));
                            bool better = mover == Player::Prolonger ? v > best_value : v < best_value;
                            if (!best || better) {
                                best = a;
                                best_value = v;
                            }
                        }
                        return *best;
                    }};
}

}  // namespace satgame
