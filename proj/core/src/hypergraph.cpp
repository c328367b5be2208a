#include "hypercover/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypercover {

std::int64_t binom(std::int64_t n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t triple_rank(int a, int b, int c) {
    return binom(c, 3) + binom(b, 2) + a;
}

Triple triple_unrank(std::int64_t r) {
    int c = 2;
    while (binom(c + 1, 3) <= r) ++c;
    r -= binom(c, 3);
    int b = 1;
    while (binom(b + 1, 2) <= r) ++b;
    r -= binom(b, 2);
    return {static_cast<int>(r), b, c};
}

std::int64_t pair_rank(int a, int b) {
    return binom(b, 2) + a;
}

Pair pair_unrank(std::int64_t r) {
    int b = 1;
    while (binom(b + 1, 2) <= r) ++b;
    return {static_cast<int>(r - binom(b, 2)), b};
}

namespace {

void check_vertex_count(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
}

} // namespace

// ---------------------------------------------------------------------------
// Graph2

Graph2::Graph2(int n, std::vector<Pair> edges) : n_(n), edges_(std::move(edges)) {
    check_vertex_count(n);
    for (auto& [a, b] : edges_) {
        if (!(0 <= a && a < b && b < n_))
            throw std::invalid_argument("invalid pair {" + std::to_string(a) + "," +
                                        std::to_string(b) + "} on " + std::to_string(n_) +
                                        " vertices");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Pair& x, const Pair& y) { return pair_rank(x[0], x[1]) < pair_rank(y[0], y[1]); });
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate pair");
    mask_ = Bitset(binom(n_, 2));
    nbr_.assign(n_, Bitset(n_));
    for (const auto& [a, b] : edges_) {
        mask_.set(pair_rank(a, b));
        nbr_[a].set(b);
        nbr_[b].set(a);
    }
}

Graph2 Graph2::complete(int n) {
    std::vector<Pair> e;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) e.push_back({a, b});
    return Graph2(n, std::move(e));
}

bool Graph2::has_edge(int a, int b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    return mask_.test(pair_rank(a, b));
}

std::int64_t Graph2::degree(int v) const { return nbr_[v].count(); }

std::vector<VertexSet> Graph2::components(const Bitset& excluded) const {
    std::vector<VertexSet> out;
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s] || excluded.test(s)) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            nbr_[v].for_each([&](std::int64_t w) {
                if (!seen[w] && !excluded.test(w)) {
                    seen[w] = 1;
                    stack.push_back(static_cast<int>(w));
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> Graph2::components() const { return components(Bitset(n_)); }

// ---------------------------------------------------------------------------
// ThreeGraph

ThreeGraph::ThreeGraph(int n, std::vector<Triple> edges) : n_(n), edges_(std::move(edges)) {
    check_vertex_count(n);
    for (auto& [a, b, c] : edges_) {
        if (!(0 <= a && a < b && b < c && c < n_))
            throw std::invalid_argument("invalid triple {" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + "} on " +
                                        std::to_string(n_) + " vertices");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Triple& x, const Triple& y) {
        return triple_rank(x[0], x[1], x[2]) < triple_rank(y[0], y[1], y[2]);
    });
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    if (n_ <= kEdgeMaskMaxVertices) {
        mask_ = Bitset(binom(n_, 3));
        for (const auto& [a, b, c] : edges_) mask_.set(triple_rank(a, b, c));
    }
}

ThreeGraph ThreeGraph::complete(int n) {
    std::vector<Triple> e;
    e.reserve(static_cast<std::size_t>(binom(n, 3)));
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) e.push_back({a, b, c});
    return ThreeGraph(n, std::move(e));
}

ThreeGraph ThreeGraph::empty(int n) { return ThreeGraph(n, {}); }

ThreeGraph ThreeGraph::from_edge_mask(int n, std::uint64_t mask) {
    if (binom(n, 3) > 64) throw std::invalid_argument("edge mask only covers C(n,3) <= 64");
    std::vector<Triple> e;
    for (std::int64_t r = 0; r < binom(n, 3); ++r)
        if ((mask >> r) & 1) e.push_back(triple_unrank(r));
    return ThreeGraph(n, std::move(e));
}

bool ThreeGraph::has_edge(int a, int b, int c) const {
    if (a == b || a == c || b == c) return false;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return has_edge_sorted({a, b, c});
}

bool ThreeGraph::has_edge_sorted(const Triple& t) const {
    if (mask_.size() > 0) return mask_.test(triple_rank(t[0], t[1], t[2]));
    return std::binary_search(edges_.begin(), edges_.end(), t, [](const Triple& x, const Triple& y) {
        return triple_rank(x[0], x[1], x[2]) < triple_rank(y[0], y[1], y[2]);
    });
}

std::int64_t ThreeGraph::degree(std::span<const int> s) const {
    for (int v : s)
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    if (s.size() == 1) return degree(s[0]);
    if (s.size() == 2) {
        if (s[0] == s[1]) throw std::invalid_argument("duplicate vertex in degree set");
        return degree(s[0], s[1]);
    }
    throw std::invalid_argument("degree set size must be 1 or 2");
}

std::int64_t ThreeGraph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    std::int64_t d = 0;
    for (const auto& [a, b, c] : edges_) d += (a == v || b == v || c == v);
    return d;
}

std::int64_t ThreeGraph::degree(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b)
        throw std::invalid_argument("invalid degree pair");
    std::int64_t d = 0;
    for (const auto& [x, y, z] : edges_)
        d += ((x == a || y == a || z == a) && (x == b || y == b || z == b));
    return d;
}

std::int64_t ThreeGraph::min_degree(int i) const {
    if (i != 1 && i != 2) throw std::invalid_argument("minimum i-degree requires i in {1,2}");
    if (n_ < i) throw std::invalid_argument("graph has fewer than i vertices");
    if (i == 1) {
        std::vector<std::int64_t> d(n_, 0);
        for (const auto& [a, b, c] : edges_) {
            ++d[a];
            ++d[b];
            ++d[c];
        }
        return *std::min_element(d.begin(), d.end());
    }
    std::vector<std::int64_t> d(binom(n_, 2), 0);
    for (const auto& [a, b, c] : edges_) {
        ++d[pair_rank(a, b)];
        ++d[pair_rank(a, c)];
        ++d[pair_rank(b, c)];
    }
    return *std::min_element(d.begin(), d.end());
}

std::pair<Graph2, std::vector<int>> ThreeGraph::link_graph(int x) const {
    if (x < 0 || x >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(x));
    std::vector<int> new_label(n_, -1);
    std::vector<int> to_old;
    to_old.reserve(n_ - 1);
    for (int v = 0; v < n_; ++v) {
        if (v == x) continue;
        new_label[v] = static_cast<int>(to_old.size());
        to_old.push_back(v);
    }
    std::vector<Pair> pairs;
    for (const auto& [a, b, c] : edges_) {
        if (a == x) pairs.push_back({new_label[b], new_label[c]});
        else if (b == x) pairs.push_back({new_label[a], new_label[c]});
        else if (c == x) pairs.push_back({new_label[a], new_label[b]});
    }
    return {Graph2(n_ - 1, std::move(pairs)), std::move(to_old)};
}

std::pair<ThreeGraph, std::vector<int>> ThreeGraph::remove_vertices(std::span<const int> u) const {
    std::vector<char> drop(n_, 0);
    for (int v : u) {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        if (drop[v]) throw std::invalid_argument("duplicate vertex in deletion set");
        drop[v] = 1;
    }
    std::vector<int> new_label(n_, -1);
    std::vector<int> to_old;
    for (int v = 0; v < n_; ++v) {
        if (drop[v]) continue;
        new_label[v] = static_cast<int>(to_old.size());
        to_old.push_back(v);
    }
    std::vector<Triple> kept;
    for (const auto& [a, b, c] : edges_)
        if (!drop[a] && !drop[b] && !drop[c])
            kept.push_back({new_label[a], new_label[b], new_label[c]});
    return {ThreeGraph(static_cast<int>(to_old.size()), std::move(kept)), std::move(to_old)};
}

const ThreeGraph::Adjacency& ThreeGraph::adjacency() const {
    if (!adj_valid_.load(std::memory_order_acquire)) {
        std::lock_guard<std::mutex> lock(adj_mutex_);
        if (adj_valid_.load(std::memory_order_relaxed)) return *adj_;
        auto adj = std::make_unique<Adjacency>();
        adj->vertex_degree.assign(n_, 0);
        adj->nbr.assign(n_, Bitset(n_));
        adj->incident.assign(n_, {});
        for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
            const auto& [a, b, c] = edges_[ei];
            adj->incident[a].push_back(static_cast<std::int32_t>(ei));
            adj->incident[b].push_back(static_cast<std::int32_t>(ei));
            adj->incident[c].push_back(static_cast<std::int32_t>(ei));
        }
        for (const auto& [a, b, c] : edges_) {
            ++adj->vertex_degree[a];
            ++adj->vertex_degree[b];
            ++adj->vertex_degree[c];
            adj->nbr[a].set(b);
            adj->nbr[a].set(c);
            adj->nbr[b].set(a);
            adj->nbr[b].set(c);
            adj->nbr[c].set(a);
            adj->nbr[c].set(b);
        }
        if (n_ <= kEdgeMaskMaxVertices) {
            adj->pair_masks_built = true;
            adj->pair_adj.assign(binom(n_, 2), Bitset(n_));
            adj->link.assign(n_, Bitset(binom(n_, 2)));
            for (const auto& [a, b, c] : edges_) {
                adj->pair_adj[pair_rank(a, b)].set(c);
                adj->pair_adj[pair_rank(a, c)].set(b);
                adj->pair_adj[pair_rank(b, c)].set(a);
                adj->link[a].set(pair_rank(b, c));
                adj->link[b].set(pair_rank(a, c));
                adj->link[c].set(pair_rank(a, b));
            }
        }
        adj_ = std::move(adj);
        adj_valid_.store(true, std::memory_order_release);
    }
    return *adj_;
}

ThreeGraph permute(const ThreeGraph& h, std::span<const int> perm) {
    std::vector<Triple> e;
    e.reserve(h.edges().size());
    for (const auto& [a, b, c] : h.edges()) {
        Triple t{perm[a], perm[b], perm[c]};
        std::sort(t.begin(), t.end());
        e.push_back(t);
    }
    return ThreeGraph(h.vertex_count(), std::move(e));
}

Graph2 permute(const Graph2& g, std::span<const int> perm) {
    std::vector<Pair> e;
    e.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) {
        Pair p{perm[a], perm[b]};
        if (p[0] > p[1]) std::swap(p[0], p[1]);
        e.push_back(p);
    }
    return Graph2(g.vertex_count(), std::move(e));
}

} // namespace hypercover
