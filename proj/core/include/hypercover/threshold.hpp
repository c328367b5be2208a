#pragma once

#include <cstdint>

#include "hypercover/hypergraph.hpp"
#include "hypercover/patterns.hpp"

namespace hypercover {

enum class SearchMethod { exhaustive, naive_oracle, probe_lower_bound };

struct SearchConfig {
    int threads = 1;
    std::int64_t node_budget = 0;  // 0 = unlimited
    std::int64_t value_floor = 0;  // incumbent seed; must be attainable by some witness
    bool symmetry_pruning = true;  // canonical-minimal leaf filter
    bool allow_incomplete = false; // permit n beyond the completeness recommendation
};

// Outcome of a threshold computation. For exhaustive and oracle methods the
// value is exactly c_i(n,F) under the fixed-uncovered-vertex reduction; for
// probe runs it is only a lower bound. The witness always has vertex 0
// pattern-uncovered and min i-degree equal to value.
struct ThresholdResult {
    PatternId pattern;
    int n = 0;
    int i = 1;
    std::int64_t value = 0;
    ThreeGraph witness;
    int designated_vertex = 0;
    SearchMethod method = SearchMethod::exhaustive;
    std::int64_t nodes_explored = 0;
    bool degenerate = false; // n < |V(F)|: no covering can exist at all
    bool complete = true;    // false when a node budget cut the search short
};

// Complete branch-and-bound maximization of delta_i over all n-vertex
// 3-graphs with vertex 0 uncovered (valid by relabeling invariance).
// Completeness is guaranteed for n <= 7 at i=1 and n <= 6 at i=2; n = 8
// requires cfg.allow_incomplete, larger n is not representable.
ThresholdResult exact_threshold(PatternId id, int n, int i, const SearchConfig& cfg = {});

// Plain enumeration of every edge subset on n <= 6 vertices; no pruning and
// no symmetry assumptions beyond fixing the uncovered vertex as 0.
ThresholdResult naive_threshold_oracle(PatternId id, int n, int i);

// Randomized saturation from seeded starting graphs (the pattern's
// construction when one exists); keeps vertex 0 uncovered throughout.
ThresholdResult probe_lower_bound(PatternId id, int n, int i, int trials, std::uint64_t seed);

} // namespace hypercover
