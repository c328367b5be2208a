#pragma once

#include <optional>
#include <vector>

#include "hypercover/hypergraph.hpp"
#include "hypercover/patterns.hpp"

namespace hypercover {

// Injective, edge-preserving map from V(F) into V(H); image[i] is the host
// vertex assigned to F-vertex i. Copies are not required to be induced.
using Embedding = std::vector<int>;

bool embedding_is_valid(const ThreeGraph& host, const ThreeGraph& f, const Embedding& e);

// Complete backtracking search for a copy of f whose image contains root.
// Absence of a result is a proof that no such copy exists.
std::optional<Embedding> find_rooted_copy(const ThreeGraph& host, const ThreeGraph& f, int root);

std::optional<Embedding> find_any_copy(const ThreeGraph& host, const ThreeGraph& f);

bool is_free(const ThreeGraph& host, const ThreeGraph& f);

// Number of injective edge-preserving maps V(F) -> V(H). Exhaustive; host is
// capped at 12 vertices.
std::int64_t count_labeled_copies(const ThreeGraph& host, const ThreeGraph& f);

// Intersection-connectivity: every pair of vertices joined through a sequence
// of pairwise-intersecting edges.
bool is_connected(const ThreeGraph& g);

struct CoverageReport {
    std::optional<PatternId> pattern;
    int n = 0;
    std::vector<std::uint8_t> covered;             // flag per host vertex
    std::vector<int> uncovered;                    // complement of covered
    std::vector<std::optional<Embedding>> witnesses; // per vertex, only if requested

    bool all_covered() const { return uncovered.empty(); }
};

CoverageReport has_covering(const ThreeGraph& host, const ThreeGraph& f, bool want_witnesses = false);
CoverageReport has_covering(const ThreeGraph& host, PatternId id, bool want_witnesses = false);

} // namespace hypercover
