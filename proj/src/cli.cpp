#include "satgame/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "satgame/analysis.hpp"
#include "satgame/solver.hpp"
#include "satgame/strategies.hpp"
#include "satgame/verify.hpp"

namespace satgame {

namespace {

const std::vector<std::string> kCommands{"solve", "play", "sweep", "verify", "enumerate"};

int parse_int(std::string_view s, const char* what)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw UsageError(std::string("bad ") + what + " '" + std::string(s) + "'");
    return v;
}

std::vector<std::string> split_commas(const std::vector<std::string>& items)
{
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty())
                out.push_back(part);
    }
    return out;
}

std::string format_seconds(std::int64_t ms)
{
    std::string s = std::to_string(ms / 1000);
    if (ms % 1000) {
        char frac[8];
        std::snprintf(frac, sizeof frac, ".%03d", static_cast<int>(ms % 1000));
        std::string f = frac;
        while (f.back() == '0')
            f.pop_back();
        s += f;
    }
    return s;
}

// "random" without a seed takes the run seed.
std::string seeded(const std::string& name, std::uint64_t seed)
{
    return name == "random" ? "random:" + std::to_string(seed) : name;
}

bool takes_family(const std::string& cmd) { return cmd != "verify"; }

}  // namespace

std::pair<int, int> parse_range(std::string_view text)
{
    auto dots = text.find("..");
    int lo = 0;
    int hi = 0;
    if (dots == std::string_view::npos) {
        lo = hi = parse_int(text, "vertex count");
    } else {
        lo = parse_int(text.substr(0, dots), "range start");
        hi = parse_int(text.substr(dots + 2), "range end");
    }
    if (lo < 1 || hi > 64 || lo > hi)
        throw UsageError("vertex range '" + std::string(text) + "' must satisfy 1 <= a <= b <= 64");
    return {lo, hi};
}

ForbiddenFamily RunConfig::resolved_family() const
{
    if (!k)
        return ForbiddenFamily::parse(family);
    if (family == "Pk" || family == "P")
        return ForbiddenFamily::path(*k);
    if (family == "Trees")
        return ForbiddenFamily::trees(*k);
    if (family == "Star")
        return ForbiddenFamily::star(*k);
    ForbiddenFamily f = ForbiddenFamily::parse(family);
    if (f.kind() == ForbiddenFamily::Kind::List || f.param() != *k)
        throw UsageError("--k " + std::to_string(*k) + " conflicts with --family " + family);
    return f;
}

std::vector<std::string> RunConfig::to_args() const
{
    std::vector<std::string> a{command};
    if (takes_family(command)) {
        a.insert(a.end(), {"--family", family});
        if (k)
            a.insert(a.end(), {"--k", std::to_string(*k)});
        a.insert(a.end(), {"--n", n_lo == n_hi ? std::to_string(n_lo)
                                               : std::to_string(n_lo) + ".." + std::to_string(n_hi)});
        a.insert(a.end(), {"--variant", variant});
        if (first)
            a.insert(a.end(), {"--first", *first});
        for (const auto& p : prolonger)
            a.insert(a.end(), {"--prolonger", p});
        for (const auto& s : shortener)
            a.insert(a.end(), {"--shortener", s});
        if (node_cap)
            a.insert(a.end(), {"--node-cap", std::to_string(node_cap)});
        if (time_cap_ms)
            a.insert(a.end(), {"--time-cap", format_seconds(time_cap_ms)});
        if (!cache.empty())
            a.insert(a.end(), {"--cache", cache});
    } else {
        for (const auto& s : suites)
            a.insert(a.end(), {"--suite", s});
        if (n_max)
            a.insert(a.end(), {"--n-max", std::to_string(n_max)});
        a.insert(a.end(), {"--games", std::to_string(games)});
    }
    a.insert(a.end(), {"--seed", std::to_string(seed)});
    if (!out.empty())
        a.insert(a.end(), {"--out", out});
    if (!format.empty())
        a.insert(a.end(), {"--format", format});
    return a;
}

namespace {

struct Parser {
    CLI::App app{"Saturation game lab: solve, play, sweep, verify, enumerate"};
    RunConfig cfg;
    std::string n_text;
    std::string first_text;
    double time_cap = 0;
    int k = 0;

    Parser()
    {
        app.require_subcommand(1);
        for (const auto& name : kCommands) {
            CLI::App* sub = app.add_subcommand(name, description(name));
            sub->add_option("--seed", cfg.seed, "Seed for random strategies and fuzzing");
            sub->add_option("--out", cfg.out, "Output file (default stdout)");
            sub->add_option("--format", cfg.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
            if (name == "verify") {
                sub->add_option("--suite", cfg.suites, "Suite to run (repeatable; default all)");
                sub->add_option("--n-max", cfg.n_max, "Largest n for solver-backed suites");
                sub->add_option("--games", cfg.games, "Fuzzed games for the claim suites");
                continue;
            }
            sub->add_option("--family", cfg.family, "P4, P5, Pk:7, Trees:5, Star:4, List:<g6>,...")->required();
            sub->add_option("--n", n_text, "Vertex count or inclusive range a..b")->required();
            sub->add_option("--k", k, "Parameter for --family Pk, Trees or Star");
            sub->add_option("--variant", cfg.variant, "standard or pass")
                ->check(CLI::IsMember({"standard", "pass"}));
            sub->add_option("--first", first_text, "First mover P or S (default both)")
                ->check(CLI::IsMember({"P", "S"}));
            sub->add_option("--prolonger", cfg.prolonger, "Prolonger strategy name(s)");
            sub->add_option("--shortener", cfg.shortener, "Shortener strategy name(s)");
            sub->add_option("--node-cap", cfg.node_cap, "Solver position limit (0 = none)");
            sub->add_option("--time-cap", time_cap, "Solver time limit in seconds (0 = none)");
            sub->add_option("--cache", cfg.cache, "Directory for persisted solve tables");
        }
    }

    static std::string description(const std::string& name)
    {
        if (name == "solve")
            return "Exact game values with the matching score window";
        if (name == "play")
            return "Play one game per n and print the record";
        if (name == "sweep")
            return "Play a grid of games and tabulate scores";
        if (name == "verify")
            return "Run verification suites";
        return "List saturated graphs up to isomorphism";
    }

    RunConfig finish()
    {
        for (auto* sub : app.get_subcommands())
            cfg.command = sub->get_name();
        if (!n_text.empty())
            std::tie(cfg.n_lo, cfg.n_hi) = parse_range(n_text);
        if (!first_text.empty())
            cfg.first = first_text;
        if (k)
            cfg.k = k;
        if (time_cap < 0)
            throw UsageError("--time-cap must be non-negative");
        cfg.time_cap_ms = static_cast<std::int64_t>(time_cap * 1000 + 0.5);
        cfg.prolonger = split_commas(cfg.prolonger);
        cfg.shortener = split_commas(cfg.shortener);
        cfg.suites = split_commas(cfg.suites);
        validate(cfg);
        return cfg;
    }

    static void validate(const RunConfig& c)
    {
        if (c.command == "verify") {
            for (const auto& s : c.suites)
                if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
                    throw UsageError("unknown suite '" + s + "'");
            if (c.games < 0 || c.n_max < 0)
                throw UsageError("--games and --n-max must be non-negative");
            return;
        }
        try {
            c.resolved_family();
        } catch (const FamilyError& e) {
            throw UsageError(e.what());
        } catch (const GraphError& e) {
            throw UsageError(e.what());
        }
        if (c.command == "enumerate" && c.n_hi > 9)
            return;  // reported as a cap at run time
        if (c.command == "play" && (c.prolonger.size() > 1 || c.shortener.size() > 1))
            throw UsageError("play takes one strategy per side; use sweep for lists");
        for (const auto& names : {c.prolonger, c.shortener})
            for (const auto& s : names) {
                try {
                    strategy_by_name(seeded(s, c.seed));
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }
    }
};

}  // namespace

RunConfig parse_run_config(const std::vector<std::string>& args)
{
    Parser p;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        p.app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    return p.finish();
}

// --- commands --------------------------------------------------------------------

namespace {

struct Output {
    std::ostream& stream;
    std::ofstream file;

    Output(const RunConfig& cfg, std::ostream& fallback) : stream(cfg.out.empty() ? fallback : file)
    {
        if (!cfg.out.empty()) {
            file.open(cfg.out, std::ios::binary | std::ios::trunc);
            if (!file)
                throw UsageError("cannot write '" + cfg.out + "'");
        }
    }
};

std::vector<Player> first_movers(const RunConfig& cfg)
{
    if (cfg.first)
        return {parse_player(*cfg.first)};
    return {Player::Prolonger, Player::Shortener};
}

std::string join_actions(const std::vector<Action>& actions)
{
    std::string s;
    for (const auto& a : actions)
        s += (s.empty() ? "" : " ") + a.to_string();
    return s;
}

using Row = std::vector<std::pair<std::string, nlohmann::ordered_json>>;

std::string cell_text(const nlohmann::ordered_json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "";
    return v.dump();
}

void write_rows(std::ostream& os, const std::vector<Row>& rows, const std::string& format)
{
    if (format == "jsonl") {
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            for (const auto& [key, value] : r)
                j[key] = value;
            os << j.dump() << "\n";
        }
        return;
    }
    if (rows.empty())
        return;
    std::vector<std::string> header;
    for (const auto& [key, value] : rows.front())
        header.push_back(key);
    os << csv_row(header);
    for (const auto& r : rows) {
        std::vector<std::string> cells;
        for (const auto& [key, value] : r)
            cells.push_back(cell_text(value));
        os << csv_row(cells);
    }
}

std::string verdict_for(const std::optional<BoundReport>& b)
{
    if (!b || !b->in_domain)
        return "n/a";
    if (b->holds)
        return "PASS";
    // the printed interval for n = 1 (mod k-1) is a known conflict
    if (b->kind == BoundKind::Trees && !b->note.empty())
        return "DEVIATION";
    return "FAIL";
}

std::filesystem::path cache_file(const RunConfig& cfg, const std::string& context)
{
    std::string name;
    for (char c : context)
        name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return std::filesystem::path(cfg.cache) / ("satgame_" + name + ".bin");
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto family = cfg.resolved_family();
    const Variant variant = parse_variant(cfg.variant);
    SolverConfig scfg;
    scfg.threads = cfg.threads;
    scfg.node_limit = cfg.node_cap;
    scfg.time_limit = std::chrono::milliseconds(cfg.time_cap_ms);
    std::vector<Row> rows;
    bool failed = false;
    bool capped = false;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
        std::unique_ptr<Solver> solver;
        std::string cap_reason;
        try {
            solver = std::make_unique<Solver>(n, family, variant, scfg);
            if (!cfg.cache.empty()) {
                std::filesystem::create_directories(cfg.cache);
                solver->load_cache(cache_file(cfg, solver->context()));
            }
        } catch (const SolveError& e) {
            cap_reason = e.what();
        }
        for (Player first : first_movers(cfg)) {
            Row r{{"family", family.to_string()}, {"variant", to_string(variant)}, {"n", n}, {"first", to_string(first)}};
            std::string reason = cap_reason;
            std::optional<SolveResult> res;
            if (solver && reason.empty()) {
                try {
                    res = solver->solve(first);
                } catch (const SolveError& e) {
                    reason = e.what();
                }
            }
            if (!res) {
                capped = true;
                err << "n=" << n << " first=" << to_string(first) << ": " << reason << "\n";
                r.insert(r.end(), {{"score", nullptr}, {"lower", nullptr}, {"upper", nullptr}, {"verdict", "unsolved"},
                                   {"principal_variation", ""}});
                rows.push_back(std::move(r));
                continue;
            }
            auto b = bound_for(family, variant, n, res->score);
            std::string verdict = verdict_for(b);
            failed = failed || verdict == "FAIL";
            nlohmann::ordered_json lo = b && b->in_domain ? nlohmann::ordered_json(to_string(b->lower)) : nullptr;
            nlohmann::ordered_json hi = b && b->in_domain ? nlohmann::ordered_json(to_string(b->upper)) : nullptr;
            r.insert(r.end(), {{"score", res->score},
                               {"lower", lo},
                               {"upper", hi},
                               {"verdict", verdict},
                               {"principal_variation", join_actions(res->principal_variation)}});
            rows.push_back(std::move(r));
        }
        if (solver && !cfg.cache.empty())
            solver->save_cache(cache_file(cfg, solver->context()));
    }
    Output o(cfg, out);
    write_rows(o.stream, rows, cfg.format.empty() ? "csv" : cfg.format);
    if (failed)
        return 1;
    return capped ? 3 : 0;
}

Strategy resolve(const std::vector<std::string>& names, std::size_t i, std::uint64_t seed)
{
    return strategy_by_name(names.empty() ? "random:" + std::to_string(seed) : seeded(names[i], seed));
}

std::string summary_line(const GameRecord& rec)
{
    std::string s = "n=" + std::to_string(rec.n) + " first=" + to_string(rec.first_mover) +
                    " score=" + std::to_string(rec.score) +
                    " min_degree=" + std::to_string(rec.terminal.min_degree());
    if (auto b = bound_for(rec.family, rec.variant, rec.n, rec.score); b && b->in_domain)
        s += " window=[" + to_string(b->lower) + "," + to_string(b->upper) + "] " + (b->holds ? "inside" : "outside");
    return s;
}

int cmd_play(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto family = cfg.resolved_family();
    const Variant variant = parse_variant(cfg.variant);
    const Player first = cfg.first ? parse_player(*cfg.first) : Player::Prolonger;
    Strategy p = resolve(cfg.prolonger, 0, cfg.seed);
    Strategy s = resolve(cfg.shortener, 0, cfg.seed);
    std::vector<GameRecord> records;
    try {
        for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
            records.push_back(play(n, family, variant, first, p, s));
    } catch (const IllegalAction& e) {
        err << e.what() << "\n";
        return 1;
    }
    // records go to --out when given; the summary always goes to stdout
    if (!cfg.out.empty()) {
        Output o(cfg, out);
        for (const auto& r : records)
            o.stream << r.to_json() << "\n";
        for (const auto& r : records)
            out << summary_line(r) << "\n";
    } else {
        for (const auto& r : records)
            out << r.to_json() << "\n";
        for (const auto& r : records)
            err << summary_line(r) << "\n";
    }
    return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto family = cfg.resolved_family();
    const Variant variant = parse_variant(cfg.variant);
    std::vector<std::string> pros = cfg.prolonger.empty() ? std::vector<std::string>{"random"} : cfg.prolonger;
    std::vector<std::string> shos = cfg.shortener.empty() ? std::vector<std::string>{"random"} : cfg.shortener;

    struct Cell {
        int n;
        Player first;
        std::string p;
        std::string s;
    };
    std::vector<Cell> cells;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
        for (Player first : first_movers(cfg))
            for (const auto& p : pros)
                for (const auto& s : shos)
                    cells.push_back({n, first, seeded(p, cfg.seed), seeded(s, cfg.seed)});

    std::vector<Row> rows(cells.size());
    std::vector<std::string> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const Cell& c = cells[i];
            try {
                GameRecord rec = play(c.n, family, variant, c.first, strategy_by_name(c.p), strategy_by_name(c.s));
                auto b = bound_for(family, variant, c.n, rec.score);
                bool in = b && b->in_domain;
                rows[i] = {{"family", family.to_string()},
                           {"variant", to_string(variant)},
                           {"n", c.n},
                           {"first", to_string(c.first)},
                           {"prolonger", c.p},
                           {"shortener", c.s},
                           {"score", rec.score},
                           {"min_degree", rec.terminal.min_degree()},
                           {"components", rec.terminal.components().count()},
                           {"lower", in ? nlohmann::ordered_json(to_string(b->lower)) : nullptr},
                           {"upper", in ? nlohmann::ordered_json(to_string(b->upper)) : nullptr},
                           {"within", in ? nlohmann::ordered_json(b->holds ? "yes" : "no") : "n/a"},
                           {"terminal_graph6", rec.terminal.to_graph6()}};
            } catch (const IllegalAction& e) {
                errors[i] = e.what();
            }
        }
    };
    const int workers = std::max(1, std::min<int>(cfg.threads, static_cast<int>(cells.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors)
        if (!e.empty()) {
            err << e << "\n";
            return 1;
        }
    Output o(cfg, out);
    write_rows(o.stream, rows, cfg.format.empty() ? "csv" : cfg.format);
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/)
{
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.n_max = cfg.n_max;
    opt.fuzz_games = cfg.games;
    opt.threads = cfg.threads;
    std::vector<std::string> suites = cfg.suites;
    if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end())
        suites = suite_names();
    std::vector<CheckResult> rows;
    for (const auto& s : suites)
        for (auto& r : run_suite(s, opt))
            rows.push_back(std::move(r));
    ReportFormat fmt = cfg.format == "jsonl" ? ReportFormat::Jsonl
                       : cfg.format == "csv" ? ReportFormat::Csv
                       : cfg.out.empty()     ? ReportFormat::Text
                                             : ReportFormat::Csv;
    Output o(cfg, out);
    o.stream << render_report(rows, fmt);
    if (!cfg.out.empty()) {
        int fails = 0;
        for (const auto& r : rows)
            fails += r.verdict == Verdict::Fail ? 1 : 0;
        out << rows.size() << " checks, " << fails << " failed\n";
    }
    return all_passed(rows) ? 0 : 1;
}

std::string label_for(const Graph& g, const ForbiddenFamily& f)
{
    std::optional<SaturatedClass> c;
    if (f == ForbiddenFamily::path(4))
        c = classify_p4_saturated(g);
    else if (f == ForbiddenFamily::path(5))
        c = classify_p5_saturated(g);
    else
        c = SaturatedClass{component_shapes(g)};
    return c ? c->describe() : "unclassified";
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto family = cfg.resolved_family();
    std::vector<Row> rows;
    try {
        for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
            for (const auto& c : enumerate_saturated(n, family))
                rows.push_back({{"n", n},
                                {"graph6", c.graph.to_graph6()},
                                {"edges", c.graph.size()},
                                {"label", label_for(c.graph, family)}});
    } catch (const SolveError& e) {
        err << e.what() << "\n";
        return 3;
    }
    Output o(cfg, out);
    if (cfg.format.empty()) {
        for (const auto& r : rows)
            o.stream << cell_text(r[1].second) << " " << r[2].second.dump() << " " << cell_text(r[3].second) << "\n";
    } else {
        write_rows(o.stream, rows, cfg.format);
    }
    return 0;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        if (cfg.command == "solve")
            return cmd_solve(cfg, out, err);
        if (cfg.command == "play")
            return cmd_play(cfg, out, err);
        if (cfg.command == "sweep")
            return cmd_sweep(cfg, out, err);
        if (cfg.command == "verify")
            return cmd_verify(cfg, out, err);
        if (cfg.command == "enumerate")
            return cmd_enumerate(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: unknown command '" << cfg.command << "'\n";
    return 2;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    {
        Parser help_probe;
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            help_probe.app.parse(reversed);
        } catch (const CLI::CallForHelp& e) {
            return help_probe.app.exit(e, out, err);
        } catch (const CLI::CallForAllHelp& e) {
            return help_probe.app.exit(e, out, err);
        } catch (const CLI::ParseError&) {
            // reported below with the uniform exit code
        }
    }
    try {
        cfg = parse_run_config(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (const char* env = std::getenv("SATGAME_THREADS")) {
        int t = std::atoi(env);
        if (t < 1) {
            err << "error: SATGAME_THREADS must be a positive integer\n";
            return 2;
        }
        cfg.threads = t;
    }
    return run_command(cfg, out, err);
}

}  // namespace satgame
