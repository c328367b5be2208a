#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypercover/constructions.hpp"
#include "hypercover/embedding.hpp"

using namespace hypercover;

namespace {

bool designated_uncovered(const Construction& c, PatternId id) {
    return !find_rooted_copy(c.graph, pattern(id).graph, *c.designated_vertex).has_value();
}

} // namespace

TEST_CASE("f5 lower-bound construction at n=100") {
    auto c = construct_f5_lower(100);
    CHECK(c.designated_vertex == 0);
    // a = isqrt(2 n^2)/4 - 1 = 34, so d(u) = a^2
    CHECK(c.graph.degree(0) == 34 * 34);
    CHECK(c.graph.min_degree(1) > 1108);
    CHECK(f5_threshold_floor(100) == 1108);
    CHECK(f5_threshold_ceil(100) == 1375);
    CHECK(exceeds_f5_lower_bound(100, c.graph.min_degree(1)));
    CHECK(designated_uncovered(c, PatternId::f5));
}

TEST_CASE("f5 construction degenerates at n=5") {
    auto c = construct_f5_lower(5);
    // a = 0: X and Y empty, Z = {1,2,3,4}, edges = C(Z,3)
    CHECK(c.graph.edge_count() == 4);
    CHECK(c.graph.degree(0) == 0);
    CHECK(exceeds_f5_lower_bound(5, c.graph.min_degree(1))); // bound is negative here
    CHECK(designated_uncovered(c, PatternId::f5));
}

TEST_CASE("f5 construction splits C(Z,2) nearly evenly") {
    for (int n : {20, 37, 100}) {
        auto c = construct_f5_lower(n);
        const int a = static_cast<int>(isqrt(2ll * n * n) / 4) - 1;
        const int z_lo = 1 + 2 * a;
        // recover |E_X| and |E_Y| by counting edges with one X (resp. Y)
        // vertex and two Z vertices
        std::int64_t ex = 0, ey = 0;
        for (const auto& [x, y, z] : c.graph.edges()) {
            int in_z = (x >= z_lo) + (y >= z_lo) + (z >= z_lo);
            if (in_z != 2) continue;
            int other = x < z_lo ? x : (y < z_lo ? y : z);
            if (other == 0) continue;
            (other <= a ? ex : ey) += 1;
        }
        CHECK(ex % a == 0);
        CHECK(ey % a == 0);
        std::int64_t sizes_diff = ex / a - ey / a;
        CHECK(std::abs(sizes_diff) <= 1);
        CHECK(ex / a + ey / a == binom(n - 1 - 2 * a, 2));
    }
}

TEST_CASE("trivial intersecting family") {
    auto c13 = construct_trivial_intersecting(13);
    CHECK(c13.graph.min_degree(1) == 11);
    CHECK(c13.graph.degree(VertexSet{5}) == 11);
    CHECK(designated_uncovered(c13, PatternId::lp3));

    auto c14 = construct_trivial_intersecting(14);
    CHECK(designated_uncovered(c14, PatternId::gp3));

    auto c4 = construct_trivial_intersecting(4);
    CHECK(c4.graph.edge_count() == 3); // K4 minus the triple avoiding the apex
    CHECK(c4.graph.min_degree(1) == 2);
}

TEST_CASE("tp3 lower-bound constructions") {
    auto c6 = construct_tp3_lower(6);
    CHECK(c6.designated_vertex == 5);
    CHECK(c6.graph.min_degree(1) == 4);
    CHECK(designated_uncovered(c6, PatternId::tp3));

    // n = 7 is the k=2 blow-up: no transversal triples exist, so the
    // non-designated degrees collapse to 2 even though d(u) = 6.
    auto c7 = construct_tp3_lower(7);
    CHECK(c7.designated_vertex == 0);
    CHECK(c7.graph.degree(0) == 6);
    CHECK(c7.graph.edge_count() == 6);
    CHECK(c7.graph.min_degree(1) == 2);
    CHECK(designated_uncovered(c7, PatternId::tp3));

    auto c10 = construct_tp3_lower(10);
    CHECK(c10.graph.min_degree(1) == 9);
    CHECK(c10.graph.degree(0) == 9);
    CHECK(designated_uncovered(c10, PatternId::tp3));

    auto c8 = construct_tp3_lower(8);
    CHECK(c8.graph.min_degree(1) == 6);
    CHECK(designated_uncovered(c8, PatternId::tp3));
}

TEST_CASE("k113 wheel") {
    auto c = construct_k113_lower(9);
    CHECK(c.designated_vertex == 8);
    CHECK(c.graph.degree(8) == 8);
    CHECK(c.graph.degree(0) == binom(5, 2) - 4 + 2); // rim vertex
    CHECK(c.graph.min_degree(1) == 8);
    CHECK(designated_uncovered(c, PatternId::k113));
    // only the hub is uncovered at n=9
    CHECK(has_covering(c.graph, PatternId::k113).uncovered == std::vector<int>{8});
}

TEST_CASE("s3 construction") {
    auto c = construct_s3_lower(11);
    CHECK(c.designated_vertex == 9);
    CHECK(c.graph.min_degree(1) == 10);
    CHECK(c.graph.degree(10) == binom(9, 2)); // the C([0..n-3],2)-apex
    CHECK(designated_uncovered(c, PatternId::s3));
}

TEST_CASE("gs3 construction") {
    auto c13 = construct_gs3_lower(13);
    CHECK(c13.graph.min_degree(1) == 6);
    CHECK(c13.graph.degree(0) == 6); // apex meets one edge per full block

    // The block construction does not actually shield the apex: two
    // transversals through a common cross-block pair plus the apex edge of
    // that pair's block assemble a copy through vertex 0. Verified here so
    // the behavior is pinned; the acceptance suite reports the discrepancy
    // against the claimed table.
    auto copy = find_rooted_copy(c13.graph, pattern(PatternId::gs3).graph, 0);
    REQUIRE(copy.has_value());
    CHECK(embedding_is_valid(c13.graph, pattern(PatternId::gs3).graph, *copy));
    CHECK(std::find(copy->begin(), copy->end(), 0) != copy->end());

    auto c14 = construct_gs3_lower(14);
    CHECK(c14.graph.min_degree(1) == 6);
    CHECK(c14.graph.degree(0) == 6);
}

TEST_CASE("turan 3-partite construction") {
    auto c9 = construct_turan_3partite(9);
    CHECK(c9.graph.edge_count() == 27);
    CHECK(is_free(c9.graph, pattern(PatternId::f5).graph));
    CHECK_FALSE(c9.designated_vertex.has_value());

    CHECK(construct_turan_3partite(4).graph.edge_count() == 2);

    auto c12 = construct_turan_3partite(12);
    CHECK(c12.graph.min_degree(1) == 16);
    for (int n = 3; n <= 120; ++n)
        CHECK(construct_turan_3partite(n).graph.edge_count() ==
              static_cast<std::int64_t>(n / 3) * ((n + 1) / 3) * ((n + 2) / 3));
}

TEST_CASE("generator preconditions") {
    CHECK_THROWS_AS(construct_f5_lower(4), std::invalid_argument);
    CHECK_THROWS_AS(construct_trivial_intersecting(3), std::invalid_argument);
    CHECK_THROWS_AS(construct_tp3_lower(5), std::invalid_argument);
    CHECK_THROWS_AS(construct_k113_lower(8), std::invalid_argument);
    CHECK_THROWS_AS(construct_s3_lower(10), std::invalid_argument);
    CHECK_THROWS_AS(construct_gs3_lower(12), std::invalid_argument);
    CHECK_THROWS_AS(construct_turan_3partite(2), std::invalid_argument);
}

TEST_CASE("claimed c1 table") {
    auto tp3 = claimed_c1(PatternId::tp3, 10);
    CHECK(tp3.kind == BoundKind::exact);
    CHECK(tp3.value == 9);
    CHECK(claimed_c1(PatternId::tp3, 9).value == 7);

    auto gs3 = claimed_c1(PatternId::gs3, 15);
    CHECK(gs3.kind == BoundKind::exact);
    CHECK(gs3.value == 7);

    auto f5 = claimed_c1(PatternId::f5, 100);
    CHECK(f5.kind == BoundKind::open_interval);
    CHECK(f5.lower == 1108);
    CHECK(f5.upper == 1375);

    CHECK(claimed_c1(PatternId::lp3, 12).kind == BoundKind::not_asserted);
    CHECK(claimed_c1(PatternId::lp3, 13).value == 11);
    CHECK(claimed_c1(PatternId::gp3, 14).value == 12);
    CHECK(claimed_c1(PatternId::k113, 9).value == 8);
    CHECK(claimed_c1(PatternId::s3, 11).value == 10);
    CHECK(claimed_c1(PatternId::k4_minus, 100).kind == BoundKind::not_asserted);
    CHECK(claimed_c1(PatternId::c6, 100).kind == BoundKind::not_asserted);
}

TEST_CASE("exact integer form of the f5 bound") {
    // spot check against rounded floating point at scattered n
    for (int n : {5, 12, 37, 100, 217, 300}) {
        double real = n * n / 8.0 - std::sqrt(2.0) * n;
        CHECK(f5_threshold_floor(n) == static_cast<std::int64_t>(std::floor(real)));
        double up = n * n / 8.0 + 1.25 * n;
        CHECK(f5_threshold_ceil(n) == static_cast<std::int64_t>(std::ceil(up)));
        CHECK(exceeds_f5_lower_bound(n, f5_threshold_floor(n) + 1));
        CHECK_FALSE(exceeds_f5_lower_bound(n, f5_threshold_floor(n)));
    }
}

TEST_CASE("construction_for maps patterns to generators") {
    CHECK(construction_for(PatternId::lp3, 13).has_value());
    CHECK(construction_for(PatternId::gp3, 14).has_value());
    CHECK_FALSE(construction_for(PatternId::k4_minus, 20).has_value());
    CHECK_FALSE(construction_for(PatternId::gs3, 12).has_value());
}
