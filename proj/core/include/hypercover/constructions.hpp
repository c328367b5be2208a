#pragma once

#include <optional>

#include "hypercover/hypergraph.hpp"
#include "hypercover/patterns.hpp"

namespace hypercover {

// A generated extremal graph together with the vertex the construction
// guarantees to be pattern-uncovered (absent for the Turán construction).
struct Construction {
    ThreeGraph graph;
    std::optional<int> designated_vertex;
};

// Vertex set {u} ⊔ X ⊔ Y ⊔ Z with u = 0, |X| = |Y| = ⌊(√2/4)n⌋ − 1 (exact
// integer arithmetic), and edges uXY ∪ ZXY ∪ X∨E_X ∪ Y∨E_Y ∪ C(Z,3), where
// E_X ⊔ E_Y splits C(Z,2) alternately in lexicographic order, E_X first.
// Requires n >= 5. No copy of F5 covers u.
Construction construct_f5_lower(int n);

// All triples through the apex vertex 0. Requires n >= 4.
// delta_1 = n-2; the apex meets no copy of LP3 or GP3.
Construction construct_trivial_intersecting(int n);

// For n ≡ 0,2 (mod 3): the graph {n-2,n-1}∨[0..n-3] ∪ C([0..n-3],3) with
// designated vertex n-1. For n ≡ 1 (mod 3), n = 3k+1: vertex u = 0, k blocks
// of 3, edges u∨C(A_i,2) plus all transversal triples over three distinct
// blocks. Requires n >= 6.
Construction construct_tp3_lower(int n);

// Wheel: hub n-1 joined to every edge of a cycle on 0..n-2, plus all rim
// triples containing no cycle pair. Requires n >= 9. The hub meets no K_{1,1,3}.
Construction construct_k113_lower(int n);

// Edges {n-2}∨{n-3,n-4}∨[0..n-5] ∪ {n-1}∨C([0..n-3],2); designated vertex
// n-2. Requires n >= 11. The designated vertex meets no S3.
Construction construct_s3_lower(int n);

// Apex 0 joined to the pair blocks B_i = {2i-1,2i} ⊆ [1..n-1], plus all
// transversal triples over three distinct blocks (a trailing singleton block
// participates in transversals only). Requires n >= 13. delta_1 = ⌊(n-1)/2⌋.
Construction construct_gs3_lower(int n);

// Balanced complete 3-partite 3-graph on consecutive ranges; F5-free with
// ⌊n/3⌋⌊(n+1)/3⌋⌊(n+2)/3⌋ edges. Requires n >= 3.
Construction construct_turan_3partite(int n);

// The lower-bound generator associated with a pattern, when one exists at n.
std::optional<Construction> construction_for(PatternId id, int n);

enum class BoundKind { exact, open_interval, not_asserted };

// The asserted value of c_1(n,F). Exact for LP3/TP3/GP3/K113/S3/GS3 above
// each result's minimal n; a strict open interval for F5; not asserted for
// K4- and C6 or below the minimal n.
struct ClaimedBound {
    PatternId pattern;
    int n = 0;
    BoundKind kind = BoundKind::not_asserted;
    std::int64_t value = 0;          // kind == exact
    std::int64_t lower = 0;          // kind == open_interval: lower < c1 < upper
    std::int64_t upper = 0;
    int valid_from = 0;
};

ClaimedBound claimed_c1(PatternId id, int n);

// ⌊n²/8 − √2·n⌋ and ⌈n²/8 + 5n/4⌉ in exact integer arithmetic.
std::int64_t f5_threshold_floor(int n);
std::int64_t f5_threshold_ceil(int n);

// Exact integer-rational test for delta1 > n²/8 − √2·n.
bool exceeds_f5_lower_bound(int n, std::int64_t delta1);

std::int64_t isqrt(std::int64_t x);

} // namespace hypercover
