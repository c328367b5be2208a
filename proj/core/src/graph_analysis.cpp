#include "hypercover/graph_analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hypercover {

Graph2 common_neighbor_graph(const Graph2& g) {
    const int n = g.vertex_count();
    Bitset seen(binom(n, 2));
    std::vector<Pair> edges;
    for (int w = 0; w < n; ++w) {
        VertexSet nb;
        g.neighbors(w).for_each([&](std::int64_t v) { nb.push_back(static_cast<int>(v)); });
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                std::int64_t r = pair_rank(nb[i], nb[j]);
                if (!seen.test(r)) {
                    seen.set(r);
                    edges.push_back({nb[i], nb[j]});
                }
            }
    }
    return Graph2(n, std::move(edges));
}

bool satisfies_common_neighbor_bound(const Graph2& g) {
    return 2 * common_neighbor_graph(g).edge_count() >= 2 * g.edge_count() - g.vertex_count();
}

namespace {

// Edmonds' blossom algorithm, O(V^3). Augmenting paths are grown from each
// exposed vertex in turn; odd cycles are contracted implicitly through the
// base[] array.
class Blossom {
public:
    explicit Blossom(const Graph2& g)
        : g_(g), n_(g.vertex_count()), match_(n_, -1), parent_(n_, -1), base_(n_, 0) {}

    int run() {
        int size = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0 && augment(v)) ++size;
        return size;
    }

private:
    const Graph2& g_;
    int n_;
    std::vector<int> match_, parent_, base_;

    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(std::vector<char>& blossom, int v, int root, int child) {
        while (base_[v] != root) {
            blossom[base_[v]] = 1;
            blossom[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    bool augment(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        std::vector<char> in_queue(n_, 0);
        std::deque<int> queue{root};
        in_queue[root] = 1;

        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            bool done = false;
            g_.neighbors(v).for_each([&](std::int64_t to64) {
                if (done) return;
                int to = static_cast<int>(to64);
                if (base_[v] == base_[to] || match_[v] == to) return;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    // Odd cycle: contract the blossom at the common ancestor.
                    int cur = lca(v, to);
                    std::vector<char> blossom(n_, 0);
                    mark_path(blossom, v, cur, to);
                    mark_path(blossom, to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom[base_[i]]) {
                            base_[i] = cur;
                            if (!in_queue[i]) {
                                in_queue[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) {
                        // Augmenting path found: alternate matches back to root.
                        int u = to;
                        while (u >= 0) {
                            int pv = parent_[u], ppv = match_[pv];
                            match_[u] = pv;
                            match_[pv] = u;
                            u = ppv;
                        }
                        done = true;
                    } else {
                        in_queue[match_[to]] = 1;
                        queue.push_back(match_[to]);
                    }
                }
            });
            if (done) return true;
        }
        return false;
    }
};

Bitset to_bitset(const VertexSet& vs, int n) {
    Bitset b(n);
    for (int v : vs) b.set(v);
    return b;
}

// Next |B|-subset in colex order; false when exhausted.
bool next_subset_colex(VertexSet& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
        int limit = (i + 1 < k) ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (int j = 0; j < i; ++j) c[j] = j;
            return true;
        }
    }
    return false;
}

std::optional<TutteBergeCertificate> certificate_with(const Graph2& g, const VertexSet& b, int s) {
    auto comps = g.components(to_bitset(b, g.vertex_count()));
    std::int64_t half_sum = 0;
    for (const auto& comp : comps) {
        if (comp.size() % 2 == 0) return std::nullopt;
        half_sum += (static_cast<std::int64_t>(comp.size()) - 1) / 2;
    }
    if (static_cast<std::int64_t>(b.size()) + half_sum != s) return std::nullopt;
    return TutteBergeCertificate{b, std::move(comps), s};
}

int smallest_noncut_vertex(const Graph2& g, const VertexSet& comp, const Bitset& excluded) {
    for (int v : comp) {
        Bitset ex = excluded;
        ex.set(v);
        // Connected after removing v: one component containing the rest.
        int remaining = static_cast<int>(comp.size()) - 1;
        if (remaining == 0) return v;
        auto sub = g.components(ex);
        for (const auto& c : sub)
            if (std::binary_search(c.begin(), c.end(), comp[v == comp[0] ? 1 : 0]) &&
                static_cast<int>(c.size()) == remaining)
                return v;
    }
    return comp[0]; // unreachable for connected components
}

// Gallai–Edmonds-style extraction: start from B = N(D)\D with one non-cut
// vertex moved in per even component, which certifies s = nu(G); then grow s
// one unit at a time by moving vertices into B.
std::optional<TutteBergeCertificate> certificate_from_matching(const Graph2& g, int s) {
    const int n = g.vertex_count();
    const int nu = max_matching_size(g);
    if (nu > s || s > n) return std::nullopt;

    std::vector<char> in_d(n, 0);
    for (int v = 0; v < n; ++v) {
        // v is missed by some maximum matching iff deleting it keeps nu.
        std::vector<Pair> kept;
        for (const auto& [a, b] : g.edges())
            if (a != v && b != v) kept.push_back({a, b});
        in_d[v] = max_matching_size(Graph2(n, std::move(kept))) == nu;
    }
    Bitset b_mask(n);
    VertexSet b;
    for (int v = 0; v < n; ++v) {
        if (in_d[v]) continue;
        bool adjacent_d = false;
        g.neighbors(v).for_each([&](std::int64_t w) { adjacent_d |= in_d[w]; });
        if (adjacent_d) {
            b_mask.set(v);
            b.push_back(v);
        }
    }
    for (const auto& comp : g.components(b_mask)) {
        if (comp.size() % 2 == 0) {
            int v = smallest_noncut_vertex(g, comp, b_mask);
            b_mask.set(v);
            b.push_back(v);
        }
    }
    std::sort(b.begin(), b.end());
    auto cert = certificate_with(g, b, nu);
    if (!cert) return std::nullopt; // extraction failed; callers treat as absent

    int cur = nu;
    while (cur < s) {
        // Shrinking an odd component by two (or absorbing a singleton) raises
        // the certified s by one.
        auto& comps = cert->components;
        auto big = std::find_if(comps.begin(), comps.end(),
                                [](const VertexSet& c) { return c.size() >= 3; });
        Bitset mask = to_bitset(cert->b, n);
        if (big != comps.end()) {
            int v1 = smallest_noncut_vertex(g, *big, mask);
            cert->b.push_back(v1);
            mask.set(v1);
            VertexSet rest;
            for (int v : *big)
                if (v != v1) rest.push_back(v);
            int v2 = smallest_noncut_vertex(g, rest, mask);
            cert->b.push_back(v2);
        } else if (!comps.empty()) {
            cert->b.push_back(comps.front()[0]);
        } else {
            return std::nullopt; // B = V already; s beyond reach
        }
        std::sort(cert->b.begin(), cert->b.end());
        ++cur;
        cert = certificate_with(g, cert->b, cur);
        if (!cert) return std::nullopt;
    }
    return cert;
}

} // namespace

int max_matching_size(const Graph2& g) { return Blossom(g).run(); }

bool certificate_is_valid(const Graph2& g, const TutteBergeCertificate& cert, int s) {
    Bitset in_b(g.vertex_count());
    for (int v : cert.b) {
        if (v < 0 || v >= g.vertex_count() || in_b.test(v)) return false;
        in_b.set(v);
    }
    auto comps = g.components(in_b);
    if (comps != cert.components) return false;
    std::int64_t half_sum = 0, total = cert.b.size();
    for (const auto& comp : comps) {
        if (comp.size() % 2 == 0) return false;
        half_sum += (static_cast<std::int64_t>(comp.size()) - 1) / 2;
        total += comp.size();
    }
    return static_cast<std::int64_t>(cert.b.size()) + half_sum == s && total == g.vertex_count();
}

std::optional<TutteBergeCertificate> tutte_berge_certificate(const Graph2& g, int s) {
    if (s < 0) return std::nullopt;
    const int n = g.vertex_count();
    if (n > 20) return certificate_from_matching(g, s);
    for (int size = 0; size <= n; ++size) {
        VertexSet b(size);
        std::iota(b.begin(), b.end(), 0);
        if (size == 0) {
            if (auto cert = certificate_with(g, {}, s)) return cert;
            continue;
        }
        do {
            if (auto cert = certificate_with(g, b, s)) return cert;
        } while (next_subset_colex(b, n));
    }
    return std::nullopt;
}

} // namespace hypercover
