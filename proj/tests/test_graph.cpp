#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "satgame/graph.hpp"
#include "satgame/hamiltonian.hpp"

using namespace satgame;

TEST_CASE("empty graph")
{
    Graph g = Graph::empty(3);
    CHECK(g.order() == 3);
    CHECK(g.size() == 0);
    CHECK(g.components().count() == 3);

    Graph one = Graph::empty(1);
    auto comps = one.components();
    REQUIRE(comps.count() == 1);
    CHECK(comps.list[0].members == bit(0));

    CHECK(Graph::empty(64).order() == 64);
    CHECK_THROWS_AS(Graph::empty(65), GraphError);
    CHECK_THROWS_AS(Graph::empty(0), GraphError);
}

TEST_CASE("add edge returns a new value")
{
    Graph e3 = Graph::empty(3);
    Graph g = e3.with_edge(0, 1);
    CHECK(g.size() == 1);
    CHECK(e3.size() == 0);
    CHECK(g.components().sizes() == std::vector<int>{2, 1});
    CHECK_THROWS_AS(g.with_edge(1, 0), GraphError);
    CHECK_THROWS_AS(Graph::empty(2).with_edge(0, 0), GraphError);
    CHECK_THROWS_AS(Graph::empty(2).with_edge(0, 2), GraphError);
}

TEST_CASE("components")
{
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {3, 4}};
    Graph g = Graph::from_edges(5, e);
    auto c = g.components();
    CHECK(c.sizes() == std::vector<int>{3, 2});
    CHECK(c.label(2) == 0);
    CHECK(c.label(4) == 3);
    CHECK(c.list[0].edges == 2);

    CHECK(Graph::empty(4).components().sizes() == std::vector<int>{1, 1, 1, 1});
    CHECK(Graph::complete(4).components().sizes() == std::vector<int>{4});
}

TEST_CASE("adding an edge merges at most two components")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        Graph g = oracle::random_graph(rng, n, 0.15);
        int before = g.components().count();
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (u == v || g.has_edge(u, v))
            continue;
        int drop = before - g.with_edge(u, v).components().count();
        CHECK((drop == 0 || drop == 1));
        CHECK(g.edges_within(g.vertices()) == g.size());
    }
}

TEST_CASE("graph6 known strings")
{
    CHECK(Graph::complete(2).to_graph6() == "A_");
    CHECK(Graph::empty(2).to_graph6() == "A?");
    CHECK(Graph::complete(3).to_graph6() == "Bw");
    CHECK(Graph::complete(4).to_graph6() == "C~");
    CHECK(Graph::from_graph6("Bw") == Graph::complete(3));
    CHECK(Graph::from_graph6(">>graph6<<C~\n") == Graph::complete(4));
    CHECK_THROWS_AS(Graph::from_graph6("C"), GraphError);
    CHECK_THROWS_AS(Graph::from_graph6(""), GraphError);
}

TEST_CASE("graph6 round trip, including the long size prefix")
{
    std::mt19937_64 rng(5);
    for (int n : {1, 2, 5, 17, 62, 63, 64}) {
        Graph g = oracle::random_graph(rng, n, 0.3);
        std::string s = g.to_graph6();
        if (n >= 63)
            CHECK(s[0] == '~');
        CHECK(Graph::from_graph6(s) == g);
    }
}

TEST_CASE("edge list text form")
{
    Graph g = Graph::path(3);
    CHECK(g.to_edge_list() == "3; 0-1,1-2");
    CHECK(Graph::from_edge_list("3; 0-1,1-2") == g);
    CHECK(Graph::from_edge_list("4;") == Graph::empty(4));
    CHECK_THROWS_AS(Graph::from_edge_list("3; 0-3"), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list("0-1"), GraphError);
}

TEST_CASE("everywhere traceable")
{
    CHECK(everywhere_traceable(Graph::complete(3), 0b111));
    CHECK(everywhere_traceable(Graph::complete(2), 0b11));
    CHECK(everywhere_traceable(Graph::empty(1), 0b1));
    CHECK_FALSE(everywhere_traceable(Graph::path(3), 0b111));
    CHECK(everywhere_traceable(Graph::cycle(5), 0b11111));
    for (int j = 1; j <= 8; ++j)
        CHECK(everywhere_traceable(Graph::complete(j), Graph::complete(j).vertices()));
    for (int m = 2; m <= 7; ++m)
        CHECK_FALSE(everywhere_traceable(Graph::star(m), Graph::star(m).vertices()));
    // vertex set {0, 2} of P_3 is not connected
    CHECK_THROWS_AS(everywhere_traceable(Graph::path(3), 0b101), GraphError);
}

TEST_CASE("hamiltonian path")
{
    auto p = hamiltonian_path(Graph::path(4), 0b1111);
    REQUIRE(p);
    CHECK(*p == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(hamiltonian_path(Graph::star(3), 0b1111));

    // two everywhere-traceable components (K_3 and K_2) joined by an edge
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {2, 3}};
    Graph g = Graph::from_edges(5, e);
    auto q = hamiltonian_path(g, g.vertices());
    REQUIRE(q);
    CHECK(*q == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("hamiltonian path agrees with brute force on small graphs")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_graph(rng, n, 0.45);
        bool connected = is_connected(g, g.vertices());
        bool brute = oracle::brute_has_path(g, n);
        auto p = hamiltonian_path(g, g.vertices());
        CHECK(p.has_value() == brute);
        if (p) {
            for (std::size_t i = 0; i + 1 < p->size(); ++i)
                CHECK(g.has_edge((*p)[i], (*p)[i + 1]));
        }
        if (connected) {
            // every vertex starts a Hamiltonian path iff endpoints cover all
            bool et = everywhere_traceable(g, g.vertices());
            CHECK(et == (hamiltonian_endpoints(g, g.vertices()) == g.vertices()));
        }
    }
}

TEST_CASE("large components fall back to ordered search")
{
    Graph g = Graph::cycle(30);
    CHECK(everywhere_traceable(g, g.vertices()));
    Graph s = Graph::star(25);
    CHECK_FALSE(hamiltonian_path(s, s.vertices()));
}
