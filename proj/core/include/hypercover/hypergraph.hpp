#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "hypercover/bitset.hpp"

namespace hypercover {

// Vertices are 0-indexed integers. n is capped so that degree counts and
// colex ranks stay comfortably inside 64-bit arithmetic.
inline constexpr int kMaxVertices = 2048;

// Edge bitmasks over all C(n,3) colex-ranked triples are only materialized
// below this vertex count; beyond it membership falls back to binary search.
inline constexpr int kEdgeMaskMaxVertices = 700;

using Triple = std::array<int, 3>;
using Pair = std::array<int, 2>;
using VertexSet = std::vector<int>;

std::int64_t binom(std::int64_t n, int k);

// Colex rank of a strictly increasing triple: C(c,3)+C(b,2)+C(a,1).
std::int64_t triple_rank(int a, int b, int c);
Triple triple_unrank(std::int64_t r);

// Colex rank of a strictly increasing pair: C(b,2)+C(a,1).
std::int64_t pair_rank(int a, int b);
Pair pair_unrank(std::int64_t r);

class Graph2;

// Simple 2-graph on n labeled vertices; edges stored as increasing pairs in
// colex order plus a bitmask over all C(n,2) pair ranks.
class Graph2 {
public:
    Graph2() : Graph2(0, {}) {}
    Graph2(int n, std::vector<Pair> edges);

    static Graph2 complete(int n);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<Pair>& edges() const { return edges_; }
    const Bitset& edge_mask() const { return mask_; }

    bool has_edge(int a, int b) const;
    std::int64_t degree(int v) const;
    const Bitset& neighbors(int v) const { return nbr_[v]; }

    // Connected components of the graph induced on V \ excluded, each sorted
    // ascending, ordered by smallest member.
    std::vector<VertexSet> components(const Bitset& excluded) const;
    std::vector<VertexSet> components() const;

private:
    int n_;
    std::vector<Pair> edges_;
    Bitset mask_;
    std::vector<Bitset> nbr_;
};

// 3-uniform hypergraph on n labeled vertices. Immutable after construction;
// edges are strictly increasing triples kept in colex order, mirrored by a
// bitmask over colex ranks for O(1) membership at moderate n.
class ThreeGraph {
public:
    ThreeGraph() : ThreeGraph(0, {}) {}
    ThreeGraph(int n, std::vector<Triple> edges);

    // Copies and moves drop the lazily built adjacency cache.
    ThreeGraph(const ThreeGraph& o) : n_(o.n_), edges_(o.edges_), mask_(o.mask_) {}
    ThreeGraph(ThreeGraph&& o) noexcept
        : n_(o.n_), edges_(std::move(o.edges_)), mask_(std::move(o.mask_)) {}
    ThreeGraph& operator=(const ThreeGraph& o) {
        if (this != &o) *this = ThreeGraph(o);
        return *this;
    }
    ThreeGraph& operator=(ThreeGraph&& o) noexcept {
        n_ = o.n_;
        edges_ = std::move(o.edges_);
        mask_ = std::move(o.mask_);
        adj_.reset();
        adj_valid_.store(false, std::memory_order_release);
        return *this;
    }

    static ThreeGraph complete(int n);
    static ThreeGraph empty(int n);
    static ThreeGraph from_edge_mask(int n, std::uint64_t mask); // n small, C(n,3) <= 64

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<Triple>& edges() const { return edges_; }

    bool has_edge(int a, int b, int c) const;
    bool has_edge_sorted(const Triple& t) const;

    // Bitmask over colex triple ranks; zero-length above kEdgeMaskMaxVertices.
    const Bitset& edge_mask() const { return mask_; }

    // d_H(S) for |S| in {1,2}.
    std::int64_t degree(std::span<const int> s) const;
    std::int64_t degree(int v) const;
    std::int64_t degree(int a, int b) const;

    // Minimum i-degree, i in {1,2}.
    std::int64_t min_degree(int i) const;

    // Link graph of x on the remaining n-1 vertices, relabeled
    // order-preservingly; second element maps new labels to original ones.
    std::pair<Graph2, std::vector<int>> link_graph(int x) const;

    // Induced subgraph on V \ U, relabeled order-preservingly; second element
    // maps new labels to original ones.
    std::pair<ThreeGraph, std::vector<int>> remove_vertices(std::span<const int> u) const;

    // Embedding support structures, built lazily on first use and cached.
    // nbr[v]: vertices sharing an edge with v. pair_adj[pair_rank(a,b)]:
    // vertices w with {a,b,w} in E. link[v]: pair ranks {a,b} with {v,a,b} in E.
    // pair_adj/link are only available when pair_masks_built.
    struct Adjacency {
        std::vector<std::int64_t> vertex_degree;
        std::vector<Bitset> nbr;
        std::vector<std::vector<std::int32_t>> incident; // edge indices per vertex
        bool pair_masks_built = false;
        std::vector<Bitset> pair_adj;
        std::vector<Bitset> link;
    };
    const Adjacency& adjacency() const;

    friend bool operator==(const ThreeGraph& a, const ThreeGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Triple> edges_;
    Bitset mask_; // empty when n_ > kEdgeMaskMaxVertices

    mutable std::mutex adj_mutex_;
    mutable std::atomic<bool> adj_valid_{false};
    mutable std::unique_ptr<Adjacency> adj_;
};

// Relabels H through perm (old vertex v becomes perm[v]).
ThreeGraph permute(const ThreeGraph& h, std::span<const int> perm);
Graph2 permute(const Graph2& g, std::span<const int> perm);

} // namespace hypercover
