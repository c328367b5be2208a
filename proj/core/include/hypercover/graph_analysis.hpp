#pragma once

#include <optional>

#include "hypercover/hypergraph.hpp"

namespace hypercover {

// The graph on V(G) joining every pair of vertices with a common neighbor.
Graph2 common_neighbor_graph(const Graph2& g);

// 2|E(cng(G))| >= 2|E(G)| - n, evaluated in doubled-integer form.
bool satisfies_common_neighbor_bound(const Graph2& g);

// Maximum matching size nu(G), via augmenting paths with blossom contraction.
int max_matching_size(const Graph2& g);

// Witness that G has no matching of size s+1: deleting B leaves only odd
// components, with |B| + sum (|V_i|-1)/2 = s and |B| + sum |V_i| = n.
struct TutteBergeCertificate {
    VertexSet b;
    std::vector<VertexSet> components;
    int s = 0;
};

bool certificate_is_valid(const Graph2& g, const TutteBergeCertificate& cert, int s);

// A certificate for the given s when one exists (equivalently nu(G) <= s and
// s <= n), found by exhaustive search over B for n <= 20 — ascending |B|,
// subsets in colex order, first valid returned — and extracted from the
// matching structure beyond.
std::optional<TutteBergeCertificate> tutte_berge_certificate(const Graph2& g, int s);

} // namespace hypercover
