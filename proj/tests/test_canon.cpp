#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "oracles.hpp"
#include "satgame/canon.hpp"

using namespace satgame;

TEST_CASE("relabeled path has the same key")
{
    std::vector<std::pair<int, int>> a{{0, 1}, {1, 2}};
    std::vector<std::pair<int, int>> b{{1, 2}, {2, 0}};
    CHECK(canonical_key(Graph::from_edges(3, a)) == canonical_key(Graph::from_edges(3, b)));
    CHECK(canonical_key(Graph::path(3)) != canonical_key(Graph::complete(3)));
    CHECK(canonical_key(Graph::empty(3)) != canonical_key(Graph::empty(4)));
}

TEST_CASE("key decodes to an isomorphic graph")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = oracle::random_graph(rng, n, 0.4);
        CanonKey k = canonical_key(g);
        Graph h = k.to_graph();
        CHECK(h.size() == g.size());
        CHECK(canonical_key(h) == k);
        CHECK(oracle::brute_canonical(h) == oracle::brute_canonical(g));
        // labeling sends g onto the decoded representative
        auto lab = canonical_labeling(g);
        CHECK(g.permuted(lab) == h);
    }
}

TEST_CASE("key classes match brute-force min-over-permutations on n <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::map<std::uint64_t, CanonKey> by_brute;
        std::map<CanonKey, std::uint64_t> by_key;
        bool consistent = true;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
            Graph g = oracle::graph_from_code(n, code);
            std::uint64_t b = oracle::brute_canonical(g);
            CanonKey k = canonical_key(g);
            auto [it1, fresh1] = by_brute.emplace(b, k);
            auto [it2, fresh2] = by_key.emplace(k, b);
            if (!(it1->second == k) || it2->second != b)
                consistent = false;
        }
        CHECK(consistent);
        CHECK(by_brute.size() == by_key.size());
    }
    // the 11 graphs on 4 vertices
    std::set<CanonKey> keys;
    for (std::uint64_t code = 0; code < 64; ++code)
        keys.insert(canonical_key(oracle::graph_from_code(4, code)));
    CHECK(keys.size() == 11);
}

TEST_CASE("separation on n = 7 matches the orbit count")
{
    // 1044 classes, computed by oracle::count_isomorphism_classes(7)
    const int expected = 1044;
    std::unordered_set<CanonKey> keys;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << 21); ++code)
        keys.insert(canonical_key(oracle::graph_from_code(7, code)));
    CHECK(static_cast<int>(keys.size()) == expected);
}

TEST_CASE("orbit-count oracle reproduces the small class counts")
{
    CHECK(oracle::count_isomorphism_classes(4) == 11);
    CHECK(oracle::count_isomorphism_classes(5) == 34);
}

TEST_CASE("invariance under 1000 random relabelings")
{
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        Graph g = oracle::random_graph(rng, n, p);
        auto perm = oracle::random_permutation(rng, n);
        CHECK(canonical_key(g) == canonical_key(g.permuted(perm)));
    }
}

TEST_CASE("highly symmetric graphs stay cheap")
{
    CHECK(canonical_key(Graph::empty(64)) == canonical_key(Graph::empty(64)));
    CHECK(canonical_key(Graph::complete(40)).to_graph().size() == 40 * 39 / 2);
    Graph matching = Graph::empty(20);
    for (int i = 0; i < 20; i += 2)
        matching = matching.with_edge(i, i + 1);
    std::mt19937_64 rng(9);
    auto perm = oracle::random_permutation(rng, 20);
    CHECK(canonical_key(matching) == canonical_key(matching.permuted(perm)));
}
