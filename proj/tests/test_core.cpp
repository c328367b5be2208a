#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercover/hypergraph.hpp"
#include "hypercover/io.hpp"
#include "support/oracles.hpp"

using namespace hypercover;
using testsupport::Rng;

TEST_CASE("colex ranks of triples and pairs round-trip") {
    std::int64_t expected = 0;
    for (int c = 2; c < 12; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) {
                CHECK(triple_rank(a, b, c) == expected);
                CHECK(triple_unrank(expected) == Triple{a, b, c});
                ++expected;
            }
    expected = 0;
    for (int b = 1; b < 12; ++b)
        for (int a = 0; a < b; ++a) {
            CHECK(pair_rank(a, b) == expected);
            CHECK(pair_unrank(expected) == Pair{a, b});
            ++expected;
        }
}

TEST_CASE("degree examples") {
    auto k5 = ThreeGraph::complete(5);
    CHECK(k5.degree(VertexSet{0}) == 6);
    CHECK(k5.degree(VertexSet{1, 3}) == 3);

    ThreeGraph single(4, {{0, 1, 2}});
    CHECK(single.degree(VertexSet{3}) == 0);

    CHECK_THROWS_AS(single.degree(VertexSet{4}), std::invalid_argument);
    CHECK_THROWS_AS(single.degree(VertexSet{0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(single.degree(VertexSet{}), std::invalid_argument);
}

TEST_CASE("minimum i-degree") {
    auto k5 = ThreeGraph::complete(5);
    CHECK(k5.min_degree(1) == 6);
    CHECK(k5.min_degree(2) == 3);
    CHECK_THROWS_AS(ThreeGraph::empty(1).min_degree(2), std::invalid_argument);
    CHECK_THROWS_AS(k5.min_degree(3), std::invalid_argument);

    // min over all vertices, attained by some vertex
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        auto h = testsupport::random_three_graph(7, 1, 3, rng);
        std::int64_t lo = h.degree(0);
        for (int v = 0; v < 7; ++v) lo = std::min(lo, h.degree(v));
        CHECK(h.min_degree(1) == lo);
    }
}

TEST_CASE("handshake identity on random graphs") {
    Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng.below(6));
        auto h = testsupport::random_three_graph(n, 1, 4, rng);
        std::int64_t sum = 0;
        for (int v = 0; v < n; ++v) sum += h.degree(v);
        CHECK(sum == 3 * h.edge_count());
    }
}

TEST_CASE("link graph") {
    ThreeGraph h(4, {{0, 1, 2}, {0, 1, 3}});
    auto [link, map] = h.link_graph(0);
    CHECK(link.vertex_count() == 3);
    CHECK(link.edges() == std::vector<Pair>{{0, 1}, {0, 2}});
    CHECK(map == std::vector<int>{1, 2, 3});

    auto [k4link, m2] = ThreeGraph::complete(5).link_graph(4);
    CHECK(k4link.edge_count() == 6); // K4

    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng.below(5));
        auto g = testsupport::random_three_graph(n, 1, 3, rng);
        int x = static_cast<int>(rng.below(n));
        CHECK(g.link_graph(x).first.edge_count() == g.degree(x));
    }
    CHECK_THROWS_AS(h.link_graph(4), std::invalid_argument);
}

TEST_CASE("remove vertices") {
    auto k5 = ThreeGraph::complete(5);
    auto [k4, map] = k5.remove_vertices(VertexSet{4});
    CHECK(k4 == ThreeGraph::complete(4));
    CHECK(map == std::vector<int>{0, 1, 2, 3});

    ThreeGraph single(3, {{0, 1, 2}});
    auto [rest, m2] = single.remove_vertices(VertexSet{2});
    CHECK(rest.vertex_count() == 2);
    CHECK(rest.edge_count() == 0);

    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 5 + static_cast<int>(rng.below(4));
        auto g = testsupport::random_three_graph(n, 1, 3, rng);
        VertexSet u;
        for (int v = 0; v < n; ++v)
            if (rng.chance(1, 4)) u.push_back(v);
        std::int64_t expect = 0;
        for (const auto& [a, b, c] : g.edges()) {
            bool hit = false;
            for (int v : u) hit |= (v == a || v == b || v == c);
            expect += !hit;
        }
        CHECK(g.remove_vertices(u).first.edge_count() == expect);
    }
    CHECK_THROWS_AS(single.remove_vertices(VertexSet{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(single.remove_vertices(VertexSet{7}), std::invalid_argument);
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(ThreeGraph(3, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ThreeGraph(3, {{0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ThreeGraph(3, {{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(ThreeGraph(4, {{0, 1, 2}, {0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph2(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ThreeGraph(kMaxVertices + 1, {}), std::invalid_argument);
}

TEST_CASE("edge mask agrees with binary search membership") {
    Rng rng(41);
    auto g = testsupport::random_three_graph(9, 1, 3, rng);
    for (std::int64_t r = 0; r < binom(9, 3); ++r) {
        auto [a, b, c] = triple_unrank(r);
        bool in_list = std::find(g.edges().begin(), g.edges().end(), Triple{a, b, c}) != g.edges().end();
        CHECK(g.has_edge(a, b, c) == in_list);
        CHECK(g.edge_mask().test(r) == in_list);
    }
}

TEST_CASE("h3 text format") {
    auto h = parse_three_graph("3\n1\n0 1 2\n");
    CHECK(h.vertex_count() == 3);
    CHECK(h.edges() == std::vector<Triple>{{0, 1, 2}});

    CHECK(serialize_three_graph(h) == "3\n1\n0 1 2\n");

    CHECK_THROWS_AS(parse_three_graph("3\n1\n0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_three_graph("3\n1\n0 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_three_graph("3\n1\n0 1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_three_graph("3\n2\n0 1 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_three_graph("x\n1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_three_graph("3\n"), ParseError);
    CHECK_THROWS_AS(parse_three_graph("3\n2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_three_graph("3\n1\n0 1 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_three_graph("3\n1\n0 1\n"), ParseError);
}

TEST_CASE("round trips canonicalize edge order") {
    Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng.below(6));
        auto g = testsupport::random_three_graph(n, 1, 3, rng);
        CHECK(parse_three_graph(serialize_three_graph(g)) == g);
        CHECK(parse_three_graph_json(serialize_three_graph_json(g)) == g);

        // colex order is what the serializer promises
        const auto& e = g.edges();
        for (std::size_t i = 1; i < e.size(); ++i)
            CHECK(triple_rank(e[i - 1][0], e[i - 1][1], e[i - 1][2]) <
                  triple_rank(e[i][0], e[i][1], e[i][2]));
    }
    // scrambled input parses to the same canonical graph
    auto a = parse_three_graph("5\n3\n1 3 4\n0 1 2\n0 2 4\n");
    auto b = parse_three_graph("5\n3\n0 1 2\n0 2 4\n1 3 4\n");
    CHECK(a == b);
}

TEST_CASE("json parsing errors") {
    CHECK_THROWS_AS(parse_three_graph_json("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_three_graph_json("{\"n\": 3}"), ParseError);
    CHECK_THROWS_AS(parse_three_graph_json("{\"n\": 3, \"edges\": [[0,1]]}"), ParseError);
    CHECK_THROWS_AS(parse_three_graph_json("{\"n\": 3, \"edges\": [[0,1,3]]}"), ParseError);
    CHECK_THROWS_AS(parse_three_graph_json("not json"), ParseError);
}

TEST_CASE("2-graph format mirrors the 3-graph format") {
    auto g = parse_graph2("4\n2\n0 1\n2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(parse_graph2(serialize_graph2(g)).edges() == g.edges());
    CHECK(parse_graph2_json(serialize_graph2_json(g)).edges() == g.edges());
    CHECK_THROWS_AS(parse_graph2("4\n1\n1 1\n"), ParseError);
}

TEST_CASE("file round trip with extension dispatch") {
    auto dir = std::filesystem::temp_directory_path();
    auto g = ThreeGraph(5, {{0, 1, 2}, {2, 3, 4}});
    save_three_graph(g, dir / "hc_test.h3");
    save_three_graph(g, dir / "hc_test.json");
    CHECK(load_three_graph(dir / "hc_test.h3") == g);
    CHECK(load_three_graph(dir / "hc_test.json") == g);
    std::filesystem::remove(dir / "hc_test.h3");
    std::filesystem::remove(dir / "hc_test.json");
}
