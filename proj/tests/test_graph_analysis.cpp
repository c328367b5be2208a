#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercover/graph_analysis.hpp"
#include "support/oracles.hpp"

using namespace hypercover;
using testsupport::Rng;

TEST_CASE("common neighbor graph on small cases") {
    Graph2 path3(3, {{0, 1}, {1, 2}});
    CHECK(common_neighbor_graph(path3).edges() == std::vector<Pair>{{0, 2}});

    Graph2 star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(common_neighbor_graph(star).edges() == std::vector<Pair>{{1, 2}, {1, 3}, {2, 3}});

    Graph2 triangle(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(common_neighbor_graph(triangle).edge_count() == 3);
}

TEST_CASE("common neighbor edge bound") {
    // perfect matching: cng is empty and the bound is tight
    std::vector<Pair> matching;
    for (int i = 0; i < 5; ++i) matching.push_back({2 * i, 2 * i + 1});
    Graph2 m(10, matching);
    CHECK(common_neighbor_graph(m).edge_count() == 0);
    CHECK(satisfies_common_neighbor_bound(m));

    CHECK(satisfies_common_neighbor_bound(Graph2(7, {})));

    Rng rng(67);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng.below(30));
        auto g = testsupport::random_graph2(n, 1 + static_cast<std::uint32_t>(rng.below(4)), 5, rng);
        CHECK(satisfies_common_neighbor_bound(g));
    }
}

TEST_CASE("common neighbor graph is monotone under edge additions") {
    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng.below(10));
        auto g = testsupport::random_graph2(n, 1, 3, rng);
        auto base = common_neighbor_graph(g);
        auto edges = g.edges();
        bool added = false;
        for (std::int64_t r = 0; r < binom(n, 2) && !added; ++r) {
            auto p = pair_unrank(r);
            if (!g.has_edge(p[0], p[1])) {
                edges.push_back(p);
                added = true;
            }
        }
        if (!added) continue;
        auto bigger = common_neighbor_graph(Graph2(n, edges));
        for (const auto& [a, b] : base.edges()) CHECK(bigger.has_edge(a, b));
    }
}

TEST_CASE("maximum matching on small named graphs") {
    CHECK(max_matching_size(Graph2(4, {{0, 1}, {1, 2}, {2, 3}})) == 2); // path
    CHECK(max_matching_size(Graph2::complete(4)) == 2);
    CHECK(max_matching_size(Graph2(4, {{0, 1}, {2, 3}})) == 2);
    CHECK(max_matching_size(Graph2(5, {})) == 0);
    // odd cycle forces a blossom
    CHECK(max_matching_size(Graph2(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) == 2);
    // two triangles joined by a bridge
    CHECK(max_matching_size(Graph2(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}})) == 3);
}

TEST_CASE("blossom agrees with the brute-force oracle") {
    Rng rng(73);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng.below(12));
        auto g = testsupport::random_graph2(n, 1 + static_cast<std::uint32_t>(rng.below(5)), 6, rng);
        CHECK(max_matching_size(g) == testsupport::brute_matching_size(g));
    }
}

TEST_CASE("tutte-berge certificates on the spec examples") {
    Graph2 two_k2(4, {{0, 1}, {2, 3}});
    auto cert = tutte_berge_certificate(two_k2, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->b == VertexSet{0, 2}); // first by |B| then colex
    CHECK(cert->components.size() == 2);
    CHECK(certificate_is_valid(two_k2, *cert, 2));

    Graph2 k3(3, {{0, 1}, {0, 2}, {1, 2}});
    auto cert_k3 = tutte_berge_certificate(k3, 1);
    REQUIRE(cert_k3.has_value());
    CHECK(cert_k3->b.empty());
    CHECK(cert_k3->components == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(certificate_is_valid(k3, *cert_k3, 1));

    Graph2 three_k2(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK_FALSE(tutte_berge_certificate(three_k2, 2).has_value());
}

TEST_CASE("certificate exists iff nu <= s (and s fits), exhaustive n<=5") {
    for (int n = 1; n <= 5; ++n) {
        const std::int64_t m = binom(n, 2);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<Pair> edges;
            for (std::int64_t r = 0; r < m; ++r)
                if ((mask >> r) & 1) edges.push_back(pair_unrank(r));
            Graph2 g(n, edges);
            int nu = testsupport::brute_matching_size(g);
            for (int s = 0; s <= 3; ++s) {
                auto cert = tutte_berge_certificate(g, s);
                // the deficiency form cannot express s > n
                bool expect = nu <= s && s <= n;
                CHECK(cert.has_value() == expect);
                if (cert) CHECK(certificate_is_valid(g, *cert, s));
            }
        }
    }
}

TEST_CASE("matching-structure extraction beyond the exhaustive cap") {
    Rng rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 21 + static_cast<int>(rng.below(6));
        auto g = testsupport::random_graph2(n, 1, 12, rng);
        int nu = max_matching_size(g);
        for (int s = std::max(0, nu - 1); s <= nu + 2; ++s) {
            auto cert = tutte_berge_certificate(g, s);
            CHECK(cert.has_value() == (nu <= s && s <= n));
            if (cert) CHECK(certificate_is_valid(g, *cert, s));
        }
    }
}
