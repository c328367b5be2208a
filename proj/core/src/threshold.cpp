#include "hypercover/threshold.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "hypercover/constructions.hpp"
#include "hypercover/embedding.hpp"

namespace hypercover {
namespace {

// The search state lives in a single 64-bit edge mask over colex ranks, so
// hosts are capped at 8 vertices (C(8,3) = 56).
constexpr int kMaskCap = 8;

std::int64_t degenerate_value(int n, int i) { return binom(n - i, 3 - i); }

// Every potential copy of f in K_n whose image contains vertex 0, as a 3-bit
// edge mask. Enumerated by plain nested injections, independently of the
// backtracking embedder these masks are later compared against.
std::vector<std::uint64_t> covering_witness_masks(const ThreeGraph& f, int n) {
    const int nf = f.vertex_count();
    std::vector<std::uint64_t> out;
    if (nf > n) return out;
    std::vector<int> image(nf, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == nf) {
            bool hits_zero = false;
            for (int v : image) hits_zero |= (v == 0);
            if (!hits_zero) return;
            std::uint64_t mask = 0;
            for (const auto& [a, b, c] : f.edges()) {
                int x = image[a], y = image[b], z = image[c];
                if (x > y) std::swap(x, y);
                if (y > z) std::swap(y, z);
                if (x > y) std::swap(x, y);
                mask |= std::uint64_t{1} << triple_rank(x, y, z);
            }
            out.push_back(mask);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            used[w] = 1;
            image[depth] = w;
            self(self, depth + 1);
            used[w] = 0;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Shared tables for one (pattern, n, i) search instance.
struct SearchSpace {
    int n = 0;
    int i = 1;
    int num_edges = 0;
    std::vector<int> order;                     // decision order: ranks, 0-edges last
    std::vector<std::array<int, 3>> touched;    // per rank: i-sets the edge feeds
    int num_sets = 0;                           // n (i=1) or C(n,2) (i=2)
    std::vector<std::vector<std::uint64_t>> by_edge; // witness masks per rank
    std::vector<std::vector<int>> perm_rank;    // symmetry: rank image per permutation

    SearchSpace(const ThreeGraph& f, int n_, int i_, bool symmetry) : n(n_), i(i_) {
        num_edges = static_cast<int>(binom(n, 3));
        std::vector<int> without_zero, with_zero;
        touched.resize(num_edges);
        for (int r = 0; r < num_edges; ++r) {
            auto [a, b, c] = triple_unrank(r);
            (a == 0 ? with_zero : without_zero).push_back(r);
            if (i == 1) touched[r] = {a, b, c};
            else
                touched[r] = {static_cast<int>(pair_rank(a, b)), static_cast<int>(pair_rank(a, c)),
                              static_cast<int>(pair_rank(b, c))};
        }
        order = std::move(without_zero);
        order.insert(order.end(), with_zero.begin(), with_zero.end());
        num_sets = i == 1 ? n : static_cast<int>(binom(n, 2));

        by_edge.resize(num_edges);
        for (std::uint64_t w : covering_witness_masks(f, n)) {
            std::uint64_t rest = w;
            while (rest) {
                int r = std::countr_zero(rest);
                by_edge[r].push_back(w);
                rest &= rest - 1;
            }
        }

        if (symmetry) {
            std::vector<int> tail(n - 1);
            std::iota(tail.begin(), tail.end(), 1);
            while (std::next_permutation(tail.begin(), tail.end())) {
                std::vector<int> perm(n);
                for (int v = 1; v < n; ++v) perm[v] = tail[v - 1];
                std::vector<int> table(num_edges);
                for (int r = 0; r < num_edges; ++r) {
                    auto [a, b, c] = triple_unrank(r);
                    int x = perm[a], y = perm[b], z = perm[c];
                    if (x > y) std::swap(x, y);
                    if (y > z) std::swap(y, z);
                    if (x > y) std::swap(x, y);
                    table[r] = static_cast<int>(triple_rank(x, y, z));
                }
                perm_rank.push_back(std::move(table));
            }
        }
    }

    bool covers_zero_with(std::uint64_t mask, int rank) const {
        const std::uint64_t next = mask | (std::uint64_t{1} << rank);
        for (std::uint64_t w : by_edge[rank])
            if ((w & next) == w) return true;
        return false;
    }

    bool canonical(std::uint64_t mask) const {
        for (const auto& table : perm_rank) {
            std::uint64_t permuted = 0, rest = mask;
            while (rest) {
                int r = std::countr_zero(rest);
                permuted |= std::uint64_t{1} << table[r];
                rest &= rest - 1;
            }
            if (permuted < mask) return false;
        }
        return true;
    }
};

struct Best {
    std::int64_t value = 0;
    bool has_witness = false;
    std::uint64_t mask = 0;

    void consider(std::int64_t v, std::uint64_t m) {
        if (v > value || (v == value && (!has_witness || m < mask))) {
            value = v;
            has_witness = true;
            mask = m;
        }
    }
    void merge(const Best& o) {
        if (o.has_witness) consider(o.value, o.mask);
    }
};

struct Dfs {
    const SearchSpace& sp;
    Best best;
    std::vector<std::int64_t> cur, rem;
    std::uint64_t mask = 0;
    std::int64_t nodes = 0;
    std::int64_t budget = 0; // 0 = unlimited
    bool aborted = false;

    explicit Dfs(const SearchSpace& sp_, std::int64_t floor) : sp(sp_) {
        best.value = floor;
        cur.assign(sp.num_sets, 0);
        rem.assign(sp.num_sets, 0);
        for (int r = 0; r < sp.num_edges; ++r)
            for (int s : sp.touched[r]) ++rem[s];
    }

    std::int64_t bound() const {
        std::int64_t b = cur[0] + rem[0];
        for (int s = 1; s < sp.num_sets; ++s) b = std::min(b, cur[s] + rem[s]);
        return b;
    }

    void replay_prefix(std::uint64_t prefix_mask, int depth) {
        for (int idx = 0; idx < depth; ++idx) {
            const int r = sp.order[idx];
            const bool included = (prefix_mask >> r) & 1;
            for (int s : sp.touched[r]) {
                --rem[s];
                if (included) ++cur[s];
            }
        }
        mask = prefix_mask;
    }

    void run(int idx) {
        if (aborted) return;
        ++nodes;
        if (budget > 0 && nodes > budget) {
            aborted = true;
            return;
        }
        if (idx == static_cast<int>(sp.order.size())) {
            std::int64_t delta = *std::min_element(cur.begin(), cur.end());
            if (delta >= best.value && sp.canonical(mask)) best.consider(delta, mask);
            return;
        }
        if (bound() < best.value) return;
        const int r = sp.order[idx];
        if (!sp.covers_zero_with(mask, r)) {
            mask |= std::uint64_t{1} << r;
            for (int s : sp.touched[r]) {
                --rem[s];
                ++cur[s];
            }
            run(idx + 1);
            for (int s : sp.touched[r]) {
                ++rem[s];
                --cur[s];
            }
            mask &= ~(std::uint64_t{1} << r);
        }
        for (int s : sp.touched[r]) --rem[s];
        run(idx + 1);
        for (int s : sp.touched[r]) ++rem[s];
    }
};

// Enumerates the feasible prefixes at the fixed split depth, sequentially and
// with floor-only pruning, so the task list never depends on thread count.
void enumerate_prefixes(const SearchSpace& sp, Dfs& walker, int idx, int depth,
                        std::vector<std::uint64_t>& prefixes) {
    ++walker.nodes;
    if (idx == depth) {
        prefixes.push_back(walker.mask);
        return;
    }
    if (walker.bound() < walker.best.value) return;
    const int r = sp.order[idx];
    if (!sp.covers_zero_with(walker.mask, r)) {
        walker.mask |= std::uint64_t{1} << r;
        for (int s : sp.touched[r]) {
            --walker.rem[s];
            ++walker.cur[s];
        }
        enumerate_prefixes(sp, walker, idx + 1, depth, prefixes);
        for (int s : sp.touched[r]) {
            ++walker.rem[s];
            --walker.cur[s];
        }
        walker.mask &= ~(std::uint64_t{1} << r);
    }
    for (int s : sp.touched[r]) --walker.rem[s];
    enumerate_prefixes(sp, walker, idx + 1, depth, prefixes);
    for (int s : sp.touched[r]) ++walker.rem[s];
}

ThreeGraph graph_from_mask(int n, std::uint64_t mask) { return ThreeGraph::from_edge_mask(n, mask); }

ThresholdResult degenerate_result(PatternId id, int n, int i, SearchMethod method) {
    ThresholdResult res;
    res.pattern = id;
    res.n = n;
    res.i = i;
    res.value = degenerate_value(n, i);
    res.witness = ThreeGraph::complete(n);
    res.method = method;
    res.degenerate = true;
    return res;
}

} // namespace

ThresholdResult exact_threshold(PatternId id, int n, int i, const SearchConfig& cfg) {
    if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    const ThreeGraph& f = pattern(id).graph;
    if (n < f.vertex_count()) return degenerate_result(id, n, i, SearchMethod::exhaustive);
    if (n > kMaskCap)
        throw std::invalid_argument("exact search supports n <= 8; use probe_lower_bound beyond");
    const int cap = i == 1 ? 7 : 6;
    if (n > cap && !cfg.allow_incomplete)
        throw std::invalid_argument("n exceeds the completeness recommendation (" + std::to_string(cap) +
                                    " for i=" + std::to_string(i) + "); set allow_incomplete to override");

    SearchSpace sp(f, n, i, cfg.symmetry_pruning);
    const int num_positions = static_cast<int>(sp.order.size());
    const int split_depth = std::max(0, std::min(12, num_positions - 12));

    Dfs walker(sp, cfg.value_floor);
    std::vector<std::uint64_t> prefixes;
    enumerate_prefixes(sp, walker, 0, split_depth, prefixes);
    std::int64_t prefix_nodes = walker.nodes;

    const std::size_t ntasks = prefixes.size();
    std::vector<Best> results(ntasks);
    std::vector<std::int64_t> task_nodes(ntasks, 0);
    std::vector<char> task_aborted(ntasks, 0);
    const std::int64_t per_task_budget = cfg.node_budget > 0 && ntasks > 0
                                             ? std::max<std::int64_t>(1, cfg.node_budget / static_cast<std::int64_t>(ntasks))
                                             : 0;

    auto run_task = [&](std::size_t t) {
        Dfs dfs(sp, cfg.value_floor);
        dfs.budget = per_task_budget;
        dfs.replay_prefix(prefixes[t], split_depth);
        dfs.run(split_depth);
        results[t] = dfs.best;
        task_nodes[t] = dfs.nodes;
        task_aborted[t] = dfs.aborted;
    };

    const int threads = std::max(1, cfg.threads);
    if (threads == 1 || ntasks <= 1) {
        for (std::size_t t = 0; t < ntasks; ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int workers = std::min<std::size_t>(threads, ntasks);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t t = next.fetch_add(1);
                    if (t >= ntasks) return;
                    run_task(t);
                }
            });
        for (auto& th : pool) th.join();
    }

    ThresholdResult res;
    res.pattern = id;
    res.n = n;
    res.i = i;
    res.nodes_explored = prefix_nodes;
    Best best;
    best.value = cfg.value_floor;
    bool aborted = false;
    for (std::size_t t = 0; t < ntasks; ++t) {
        best.merge(results[t]);
        res.nodes_explored += task_nodes[t];
        aborted |= task_aborted[t];
    }
    if (!best.has_witness) {
        if (cfg.value_floor > 0 && !aborted) {
            // The floor overshot every attainable value; redo without it.
            SearchConfig retry = cfg;
            retry.value_floor = 0;
            return exact_threshold(id, n, i, retry);
        }
        if (!aborted) throw std::logic_error("search finished without any witness");
        // Budget exhausted before any witness: fall back to the empty graph.
        best.consider(0, 0);
    }
    res.value = best.value;
    res.witness = graph_from_mask(n, best.mask);
    res.complete = !aborted;
    res.method = aborted ? SearchMethod::probe_lower_bound : SearchMethod::exhaustive;
    return res;
}

ThresholdResult naive_threshold_oracle(PatternId id, int n, int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
    if (n < 3 || n > 6) throw std::invalid_argument("naive oracle requires 3 <= n <= 6");
    const ThreeGraph& f = pattern(id).graph;
    const int num_edges = static_cast<int>(binom(n, 3));
    const int num_sets = i == 1 ? n : static_cast<int>(binom(n, 2));

    auto witnesses = covering_witness_masks(f, n);
    std::vector<std::uint64_t> set_mask(num_sets, 0);
    for (int r = 0; r < num_edges; ++r) {
        auto [a, b, c] = triple_unrank(r);
        if (i == 1) {
            set_mask[a] |= std::uint64_t{1} << r;
            set_mask[b] |= std::uint64_t{1} << r;
            set_mask[c] |= std::uint64_t{1} << r;
        } else {
            set_mask[pair_rank(a, b)] |= std::uint64_t{1} << r;
            set_mask[pair_rank(a, c)] |= std::uint64_t{1} << r;
            set_mask[pair_rank(b, c)] |= std::uint64_t{1} << r;
        }
    }

    Best best;
    best.value = -1;
    const std::uint64_t total = std::uint64_t{1} << num_edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool covered = false;
        for (std::uint64_t w : witnesses)
            if ((w & mask) == w) {
                covered = true;
                break;
            }
        if (covered) continue;
        std::int64_t delta = std::popcount(mask & set_mask[0]);
        for (int s = 1; s < num_sets && delta > best.value; ++s)
            delta = std::min<std::int64_t>(delta, std::popcount(mask & set_mask[s]));
        best.consider(delta, mask);
    }

    ThresholdResult res;
    res.pattern = id;
    res.n = n;
    res.i = i;
    res.value = best.value;
    res.witness = graph_from_mask(n, best.mask);
    res.method = SearchMethod::naive_oracle;
    res.nodes_explored = static_cast<std::int64_t>(total);
    res.degenerate = n < f.vertex_count();
    return res;
}

ThresholdResult probe_lower_bound(PatternId id, int n, int i, int trials, std::uint64_t seed) {
    if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    const ThreeGraph& f = pattern(id).graph;
    if (n < f.vertex_count()) return degenerate_result(id, n, i, SearchMethod::probe_lower_bound);

    // splitmix64; bounded draws stay deterministic across platforms.
    std::uint64_t state = seed;
    auto next_u64 = [&state] {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    auto next_below = [&](std::uint64_t k) {
        return static_cast<std::size_t>((static_cast<unsigned __int128>(next_u64()) * k) >> 64);
    };

    std::optional<ThreeGraph> seeded;
    if (auto c = construction_for(id, n)) {
        int d = c->designated_vertex.value_or(0);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[0], perm[d]);
        ThreeGraph candidate = permute(c->graph, perm);
        // Only usable as a start point if the designated vertex really is
        // uncovered; the search invariant depends on it.
        if (!find_rooted_copy(candidate, f, 0)) seeded = std::move(candidate);
    }

    std::vector<Triple> universe;
    for (std::int64_t r = 0; r < binom(n, 3); ++r) universe.push_back(triple_unrank(r));

    ThresholdResult res;
    res.pattern = id;
    res.n = n;
    res.i = i;
    res.method = SearchMethod::probe_lower_bound;
    res.complete = false;
    res.witness = seeded ? *seeded : ThreeGraph::empty(n);
    res.value = res.witness.min_degree(i);

    std::int64_t checks = 0;
    for (int t = 0; t < std::max(1, trials); ++t) {
        std::vector<Triple> edges;
        if (t == 0 && seeded) edges = seeded->edges();
        ThreeGraph current(n, edges);
        std::vector<Triple> missing;
        for (const auto& e : universe)
            if (!current.has_edge_sorted(e)) missing.push_back(e);
        for (std::size_t j = missing.size(); j > 1; --j) std::swap(missing[j - 1], missing[next_below(j)]);
        for (const auto& e : missing) {
            std::vector<Triple> attempt = current.edges();
            attempt.push_back(e);
            ThreeGraph candidate(n, std::move(attempt));
            ++checks;
            if (!find_rooted_copy(candidate, f, 0)) current = std::move(candidate);
        }
        std::int64_t delta = current.min_degree(i);
        if (delta > res.value) {
            res.value = delta;
            res.witness = std::move(current);
        }
    }
    res.nodes_explored = checks;
    return res;
}

} // namespace hypercover
