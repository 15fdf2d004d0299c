#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "strongedge/graph.hpp"

using namespace strongedge;

TEST_CASE("graph construction canonicalizes and rejects bad input")
{
    Graph g(4, {{2, 1}, {0, 3}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.edge_id(3, 0) == 1);
    CHECK(g.edge_id(2, 3) == -1);
    CHECK(g.neighbors(0) == std::vector<Vertex>{1, 3});
    CHECK(g.incident(1) == std::vector<EdgeId>{0, 2});
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("graph6 decoding of hand-decoded strings")
{
    Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});

    Graph single = parse_graph6("@");
    CHECK(single.order() == 1);
    CHECK(single.size() == 0);

    Graph triangle = parse_graph6("Bw");
    CHECK(triangle == named::complete(3));
    CHECK(to_graph6(triangle) == "Bw");
}

TEST_CASE("graph6 errors carry byte offsets")
{
    auto offset_of = [](std::string_view text) {
        try {
            parse_graph6(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("~") == 0);      // long form is not supported
    CHECK(offset_of("Bw?") == 2);    // one byte too many
    CHECK(offset_of("D?") == 2);     // one byte short
    CHECK(offset_of("B\x7f") == 1);  // outside '?'..'~'
    CHECK(offset_of("Bx") == 1);     // padding bits set
}

TEST_CASE("graph6 round trip on random graphs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = oracle::random_graph(rng, n, 0.3);
        std::string text = to_graph6(g);
        CHECK(parse_graph6(text) == g);
        CHECK(to_graph6(parse_graph6(text)) == text);
    }
}

TEST_CASE("edge lists")
{
    CHECK(parse_edge_list("0 1\n1 2") == named::path(3));
    Graph sparse = parse_edge_list("n=4\n0 1\n");
    CHECK(sparse.order() == 4);
    CHECK(sparse.size() == 1);
    CHECK(parse_edge_list("# a comment\n\n0 1 # trailing\n").size() == 1);
    CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 -1"), ParseError);
    Graph p = named::petersen();
    CHECK(parse_edge_list(to_edge_list(p)) == p);
}

TEST_CASE("sees relation")
{
    Graph p4 = named::path(4);
    CHECK(edge_sees(p4, 0, 2));
    CHECK_FALSE(edge_sees(p4, 1, 1));
    Graph c6 = named::cycle(6);
    CHECK_FALSE(edge_sees(c6, c6.edge_id(0, 1), c6.edge_id(3, 4)));
    CHECK_THROWS_AS(edge_sees(p4, 0, 7), std::out_of_range);
}

TEST_CASE("conflict graphs of small named graphs")
{
    ConflictGraph k3(named::complete(3));
    for (EdgeId e = 0; e < 3; ++e)
        CHECK(k3.sees(e).size() == 2);
    ConflictGraph star(named::star(5));
    for (EdgeId e = 0; e < 5; ++e)
        CHECK(star.sees(e).size() == 4);
    ConflictGraph c6(named::cycle(6));
    for (EdgeId e = 0; e < 6; ++e)
        CHECK(c6.sees(e).size() == 4);
}

TEST_CASE("conflict graph agrees with the definition and the degree bound on random graphs")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = oracle::random_graph(rng, n, 0.35);
        ConflictGraph cg(g);
        for (EdgeId e = 0; e < g.size(); ++e) {
            CHECK_FALSE(cg.sees(e, e));
            for (EdgeId f = 0; f < g.size(); ++f) {
                CHECK(cg.sees(e, f) == oracle::sees(g, g.edge(e), g.edge(f)));
                CHECK(cg.sees(e, f) == cg.sees(f, e));
            }
            auto [u, v] = g.edge(e);
            int bound = g.degree(u) - 1 + g.degree(v) - 1;
            for (Vertex w : g.neighbors(u))
                if (w != v)
                    bound += g.degree(w) - 1;
            for (Vertex w : g.neighbors(v))
                if (w != u)
                    bound += g.degree(w) - 1;
            CHECK(static_cast<int>(cg.sees(e).size()) <= bound);
        }
    }
}

TEST_CASE("vertex deletion")
{
    auto k3 = delete_vertex(named::complete(3), 1);
    CHECK(k3.graph == named::path(2));
    CHECK(k3.vertex_map == std::vector<Vertex>{0, -1, 1});

    auto star = delete_vertex(named::star(5), 0);
    CHECK(star.graph.order() == 5);
    CHECK(star.graph.size() == 0);

    for (Vertex v = 0; v < 10; ++v) {
        auto p = delete_vertex(named::petersen(), v);
        CHECK(p.graph.order() == 9);
        CHECK(p.graph.size() == 12);
    }
    CHECK_THROWS(delete_vertex(named::complete(3), 3));
}

TEST_CASE("deletion never creates new conflicts among surviving edges")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(rng, 9, 0.4);
        Vertex v = static_cast<Vertex>(rng() % 9);
        auto d = delete_vertex(g, v);
        ConflictGraph before(g), after(d.graph);
        for (EdgeId e = 0; e < g.size(); ++e)
            for (EdgeId f = 0; f < g.size(); ++f) {
                if (d.edge_map[e] < 0 || d.edge_map[f] < 0)
                    continue;
                CHECK(d.graph.edge(d.edge_map[e]).u == d.vertex_map[g.edge(e).u]);
                if (!before.sees(e, f))
                    CHECK_FALSE(after.sees(d.edge_map[e], d.edge_map[f]));
            }
    }
}

TEST_CASE("relabel preserves structure")
{
    Graph p = named::petersen();
    std::vector<Vertex> perm{3, 1, 4, 0, 9, 2, 6, 5, 8, 7};
    Graph q = relabel(p, perm);
    CHECK(q.size() == 15);
    for (const auto& [u, v] : p.edges())
        CHECK(q.adjacent(perm[u], perm[v]));
}
