#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hypercover/embedding.hpp"
#include "hypercover/patterns.hpp"

using namespace hypercover;

namespace {

std::vector<int> sorted_degrees(const ThreeGraph& g) {
    std::vector<int> d(g.vertex_count(), 0);
    for (const auto& [a, b, c] : g.edges()) {
        ++d[a];
        ++d[b];
        ++d[c];
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("canonical labelings") {
    CHECK(pattern(PatternId::f5).graph == ThreeGraph(5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}));
    CHECK(pattern(PatternId::k4_minus).graph == ThreeGraph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));
    CHECK(pattern(PatternId::c6).graph == ThreeGraph(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}));
    CHECK(pattern(PatternId::lp3).graph == ThreeGraph(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}));
    CHECK(pattern(PatternId::tp3).graph == ThreeGraph(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}));
    CHECK(pattern(PatternId::gp3).graph == ThreeGraph(6, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}}));
    CHECK(pattern(PatternId::k113).graph == ThreeGraph(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}));
    CHECK(pattern(PatternId::s3).graph == ThreeGraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}));
    CHECK(pattern(PatternId::gs3).graph == ThreeGraph(6, {{0, 1, 2}, {0, 1, 3}, {0, 4, 5}}));
}

TEST_CASE("every pattern has 3 edges, 4-7 vertices, and is connected") {
    std::set<int> sizes;
    for (PatternId id : kAllPatterns) {
        const auto& p = pattern(id);
        CHECK(p.graph.edge_count() == 3);
        CHECK(p.graph.vertex_count() >= 4);
        CHECK(p.graph.vertex_count() <= 7);
        CHECK(is_connected(p.graph));
        sizes.insert(p.graph.vertex_count());
    }
    CHECK(sizes == std::set<int>{4, 5, 6, 7});
}

TEST_CASE("pairwise non-isomorphic") {
    for (std::size_t i = 0; i < kAllPatterns.size(); ++i)
        for (std::size_t j = i + 1; j < kAllPatterns.size(); ++j)
            CHECK_FALSE(isomorphic(pattern(kAllPatterns[i]).graph, pattern(kAllPatterns[j]).graph));
    for (PatternId id : kAllPatterns) CHECK(isomorphic(pattern(id).graph, pattern(id).graph));
}

TEST_CASE("lp3 edges intersect pairwise in at most one vertex") {
    const auto& e = pattern(PatternId::lp3).graph.edges();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            int common = 0;
            for (int x : e[i])
                for (int y : e[j]) common += (x == y);
            CHECK(common <= 1);
        }
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(ThreeGraph(3, {{0, 1, 2}})) == 6);
    CHECK(automorphism_count(pattern(PatternId::f5).graph) == 4);
    CHECK(automorphism_count(pattern(PatternId::k4_minus).graph) == 6);

    std::int64_t factorial[8] = {1, 1, 2, 6, 24, 120, 720, 5040};
    for (PatternId id : kAllPatterns) {
        const auto& p = pattern(id);
        CHECK(p.automorphism_count == automorphism_count(p.graph)); // stable
        CHECK(factorial[p.graph.vertex_count()] % p.automorphism_count == 0);
    }
    CHECK_THROWS_AS(automorphism_count(ThreeGraph::empty(11)), std::invalid_argument);
}

TEST_CASE("degree sequences") {
    CHECK(sorted_degrees(pattern(PatternId::f5).graph) == std::vector<int>{1, 2, 2, 2, 2});
    auto k113 = sorted_degrees(pattern(PatternId::k113).graph);
    CHECK(k113.back() == 3); // a vertex meeting all three edges
}

TEST_CASE("cli names resolve case-insensitively") {
    CHECK(pattern_from_name("k4-") == PatternId::k4_minus);
    CHECK(pattern_from_name("K4-") == PatternId::k4_minus);
    CHECK(pattern_from_name("C6") == PatternId::c6);
    CHECK(pattern_from_name("f5") == PatternId::f5);
    CHECK(pattern_from_name("LP3") == PatternId::lp3);
    CHECK(pattern_from_name("tp3") == PatternId::tp3);
    CHECK(pattern_from_name("gP3") == PatternId::gp3);
    CHECK(pattern_from_name("k113") == PatternId::k113);
    CHECK(pattern_from_name("S3") == PatternId::s3);
    CHECK(pattern_from_name("gs3") == PatternId::gs3);
    CHECK_FALSE(pattern_from_name("k5").has_value());
    for (PatternId id : kAllPatterns) CHECK(pattern_from_name(pattern_name(id)) == id);
}
