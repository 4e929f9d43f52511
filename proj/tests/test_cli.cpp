#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "satgame/cli.hpp"
#include "satgame/verify.hpp"

using namespace satgame;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

Run run(const RunConfig& cfg)
{
    std::ostringstream out, err;
    int code = run_command(cfg, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name)
{
    fs::path dir = fs::temp_directory_path() / "satgame_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

RunConfig random_config(std::mt19937_64& rng)
{
    auto pick = [&](const std::vector<std::string>& xs) { return xs[rng() % xs.size()]; };
    RunConfig c;
    c.command = pick({"solve", "play", "sweep", "verify", "enumerate"});
    c.seed = rng() % 1000;
    if (rng() % 2)
        c.out = "out" + std::to_string(rng() % 10) + ".txt";
    if (rng() % 2)
        c.format = pick({"csv", "jsonl"});
    if (c.command == "verify") {
        int m = static_cast<int>(rng() % 3);
        for (int i = 0; i < m; ++i)
            c.suites.push_back(pick(suite_names()));
        c.n_max = static_cast<int>(rng() % 9);
        c.games = static_cast<int>(rng() % 20000);
        return c;
    }
    switch (rng() % 4) {
    case 0:
        c.family = pick({"P4", "P5", "Pk:6", "Trees:4", "Star:3", "List:Bw"});
        break;
    case 1:
        c.family = "Pk";
        c.k = 3 + static_cast<int>(rng() % 5);
        break;
    case 2:
        c.family = "Trees";
        c.k = 3 + static_cast<int>(rng() % 5);
        break;
    default:
        c.family = "Star";
        c.k = 2 + static_cast<int>(rng() % 4);
        break;
    }
    c.n_lo = 1 + static_cast<int>(rng() % 9);
    c.n_hi = c.n_lo + static_cast<int>(rng() % 3);
    c.variant = pick({"standard", "pass"});
    if (rng() % 2)
        c.first = pick({"P", "S"});
    std::vector<std::string> strategies{"random", "random:9", "greedy-min", "greedy-max", "p-p4", "s-p5", "traceable"};
    int lists = c.command == "play" ? 1 : 3;
    for (int i = 0, m = static_cast<int>(rng() % (lists + 1)); i < m; ++i)
        c.prolonger.push_back(pick(strategies));
    for (int i = 0, m = static_cast<int>(rng() % (lists + 1)); i < m; ++i)
        c.shortener.push_back(pick(strategies));
    c.node_cap = rng() % 2 ? rng() % 100000 : 0;
    c.time_cap_ms = rng() % 2 ? static_cast<std::int64_t>(rng() % 90000) : 0;
    if (rng() % 3 == 0)
        c.cache = "cache-dir";
    return c;
}

}  // namespace

TEST_CASE("vertex ranges")
{
    CHECK(parse_range("7") == std::pair{7, 7});
    CHECK(parse_range("4..9") == std::pair{4, 9});
    CHECK(parse_range("1..64") == std::pair{1, 64});
    for (const char* bad : {"0", "65", "5..3", "x", "3..", "..4", "3...5", "-2", "4..9x"})
        CHECK_THROWS_AS(parse_range(bad), UsageError);
}

TEST_CASE("configuration round trip through the argument list")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        RunConfig c = random_config(rng);
        auto args = c.to_args();
        std::string joined;
        for (const auto& a : args)
            joined += a + " ";
        INFO(joined);
        CHECK(parse_run_config(args) == c);
    }
}

TEST_CASE("comma lists and the k parameter")
{
    auto c = parse_run_config({"sweep", "--family", "Trees", "--k", "5", "--n", "6..8", "--prolonger", "p-trees,random",
                               "--shortener", "greedy-min", "--shortener", "greedy-max"});
    CHECK(c.prolonger == std::vector<std::string>{"p-trees", "random"});
    CHECK(c.shortener == std::vector<std::string>{"greedy-min", "greedy-max"});
    CHECK(c.resolved_family() == ForbiddenFamily::trees(5));
    CHECK(parse_run_config({"solve", "--family", "Pk", "--k", "6", "--n", "4"}).resolved_family() ==
          ForbiddenFamily::path(6));
    CHECK(parse_run_config({"solve", "--family", "P5", "--k", "5", "--n", "4"}).resolved_family() ==
          ForbiddenFamily::path(5));
    CHECK(parse_run_config({"solve", "--family", "P4", "--n", "4", "--time-cap", "1.5"}).time_cap_ms == 1500);
}

TEST_CASE("usage errors are reported before any work")
{
    std::vector<std::vector<std::string>> bad{
        {},
        {"frobnicate"},
        {"solve", "--n", "5"},
        {"solve", "--family", "P4"},
        {"solve", "--family", "P4", "--n", "0"},
        {"solve", "--family", "P4", "--n", "9..4"},
        {"solve", "--family", "P4", "--n", "65"},
        {"solve", "--family", "P4", "--k", "5", "--n", "4"},
        {"solve", "--family", "Q7", "--n", "4"},
        {"solve", "--family", "List:??", "--n", "4"},
        {"solve", "--family", "P4", "--n", "4", "--variant", "fast"},
        {"solve", "--family", "P4", "--n", "4", "--first", "X"},
        {"solve", "--family", "P4", "--n", "4", "--format", "xml"},
        {"solve", "--family", "P4", "--n", "4", "--time-cap", "-1"},
        {"play", "--family", "P4", "--n", "4", "--prolonger", "nonsense"},
        {"play", "--family", "P4", "--n", "4", "--prolonger", "p-p4,random"},
        {"verify", "--suite", "nope"},
        {"verify", "--games", "-5"},
        {"verify", "--family", "P4"},
    };
    for (const auto& args : bad) {
        std::string joined;
        for (const auto& a : args)
            joined += a + " ";
        INFO(joined);
        CHECK_THROWS_AS(parse_run_config(args), UsageError);
        Run r = cli(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("exit codes")
{
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"solve", "--help"}).code == 0);
    Run solved = cli({"solve", "--family", "P4", "--n", "3..5"});
    CHECK(solved.code == 0);
    CHECK(solved.out.find("P4,standard,4,P,2,8/5,21/5,PASS") != std::string::npos);
    CHECK(solved.out.find("P4,standard,4,S,3,8/5,21/5,PASS") != std::string::npos);
    // beyond the vertex cap and under a tiny node budget
    Run capped = cli({"solve", "--family", "P4", "--n", "11", "--first", "P"});
    CHECK(capped.code == 3);
    CHECK(capped.out.find("unsolved") != std::string::npos);
    CHECK(cli({"solve", "--family", "P5", "--n", "9", "--node-cap", "5"}).code == 3);
    CHECK(cli({"enumerate", "--family", "P4", "--n", "10"}).code == 3);
    // printed tree interval rows are deviations, not failures
    Run trees = cli({"solve", "--family", "Trees:4", "--n", "4", "--first", "P"});
    CHECK(trees.code == 0);
    CHECK(trees.out.find("DEVIATION") != std::string::npos);
    CHECK(cli({"verify", "--suite", "algebra", "--games", "200"}).code == 0);
}

TEST_CASE("repeated runs give identical bytes")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"solve", "--family", "P5", "--n", "4..7"},
             {"play", "--family", "P4", "--n", "3..12", "--prolonger", "random", "--shortener", "greedy-min", "--seed", "5"},
             {"sweep", "--family", "Star:3", "--n", "5..9", "--prolonger", "p-star,random", "--shortener", "random,greedy-max",
              "--seed", "11", "--format", "jsonl"},
             {"enumerate", "--family", "P5", "--n", "6..8", "--format", "csv"},
             {"verify", "--suite", "fuzz", "--games", "300", "--seed", "4"}}) {
        Run a = cli(args);
        Run b = cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("sweep output does not depend on the worker count")
{
    auto cfg = parse_run_config({"sweep", "--family", "P5", "--n", "4..12", "--prolonger", "p-p5,random,greedy-max",
                                 "--shortener", "s-p5,random", "--seed", "2"});
    cfg.threads = 1;
    Run one = run(cfg);
    cfg.threads = 4;
    Run four = run(cfg);
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    // header plus one row per n x first mover x prolonger x shortener
    CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 1 + 9 * 2 * 3 * 2);
}

TEST_CASE("files written with --out")
{
    fs::path csv = scratch("verify.csv");
    Run r = cli({"verify", "--suite", "algebra", "--games", "100", "--out", csv.string()});
    CHECK(r.code == 0);
    std::string body = slurp(csv);
    CHECK(body.rfind("suite,check,verdict,detail\r\n", 0) == 0);
    CHECK(body.find("\r\nalgebra,") != std::string::npos);

    fs::path jsonl = scratch("play.jsonl");
    r = cli({"play", "--family", "P4", "--n", "4..5", "--prolonger", "p-p4", "--shortener", "s-p4", "--out",
             jsonl.string()});
    CHECK(r.code == 0);
    CHECK(slurp(jsonl).rfind("{\"n\":4,\"family\":\"P4\"", 0) == 0);
    CHECK(r.out.find("n=5 first=P score=4") != std::string::npos);
}

TEST_CASE("solve cache reuse")
{
    fs::path dir = scratch("cache");
    fs::remove_all(dir);
    std::vector<std::string> args{"solve", "--family", "P5", "--n", "6..7", "--cache", dir.string()};
    Run cold = cli(args);
    CHECK(cold.code == 0);
    CHECK_FALSE(fs::is_empty(dir));
    Run warm = cli(args);
    CHECK(warm.out == cold.out);
}

TEST_CASE("csv quoting")
{
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
    CHECK(csv_field("cr\r") == "\"cr\r\"");
    CHECK(csv_field("") == "");
    CHECK(csv_row({"x", "y,z", ""}) == "x,\"y,z\",\r\n");
}
