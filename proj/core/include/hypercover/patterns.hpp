#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "hypercover/hypergraph.hpp"

namespace hypercover {

// The nine connected 3-graphs with exactly 3 edges.
enum class PatternId {
    k4_minus, // K_4^(3) minus an edge:      ({0..3}, {012, 013, 023})
    c6,       // linear triangle:            ({0..5}, {012, 234, 045})
    f5,       // generalized triangle:       ({0..4}, {012, 013, 234})
    lp3,      // linear 3-path:              ({0..6}, {012, 234, 456})
    tp3,      // tight 3-path:               ({0..4}, {012, 123, 234})
    gp3,      // mixed 3-path:               ({0..5}, {012, 123, 345})
    k113,     // complete 3-partite K_{1,1,3}: ({0..4}, {012, 013, 014})
    s3,       // linear star:                ({0..6}, {012, 034, 056})
    gs3,      // mixed star:                 ({0..5}, {012, 013, 045})
};

inline constexpr std::array<PatternId, 9> kAllPatterns{
    PatternId::k4_minus, PatternId::c6,   PatternId::f5,  PatternId::lp3, PatternId::tp3,
    PatternId::gp3,      PatternId::k113, PatternId::s3,  PatternId::gs3,
};

struct Pattern {
    PatternId id;
    std::string_view name; // CLI name, e.g. "k4-", "f5"
    ThreeGraph graph;
    int automorphism_count;
};

const Pattern& pattern(PatternId id);

std::string_view pattern_name(PatternId id);
std::optional<PatternId> pattern_from_name(std::string_view name); // case-insensitive

// Number of vertex permutations mapping the edge set onto itself, by
// exhaustive check. Throws for graphs on more than 10 vertices.
std::int64_t automorphism_count(const ThreeGraph& f);

// True when some bijection between the vertex sets maps edges onto edges.
// Exhaustive; both graphs must have at most 10 vertices.
bool isomorphic(const ThreeGraph& a, const ThreeGraph& b);

} // namespace hypercover
