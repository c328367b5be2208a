#include "hypercover/embedding.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hypercover {
namespace {

// The engine assigns F-vertices one at a time (or two at once), always
// verifying every F-edge as soon as its image is fully determined. Candidate
// host vertices are narrowed through the host's cached adjacency bitmasks
// before any explicit probing. Step kinds, in planner preference order:
//   Single     one vertex completing at least one F-edge (narrow candidates)
//   PairJoint  two vertices sharing >= 2 edges whose thirds are assigned
//   EdgeExtend two vertices of an F-edge whose third is assigned, walked
//              through the host edges incident to the anchor's image
//   Single     (loose) fallback with neighbor-mask narrowing only
struct PlanStep {
    enum class Kind { single, pair_joint, edge_extend } kind = Kind::single;
    int f0 = -1;
    int f1 = -1;                           // pair_joint / edge_extend
    int anchor = -1;                       // edge_extend: assigned F-vertex of the edge
    std::vector<std::array<int, 2>> exact; // assigned F-pairs (a,b): {img a, img b, w} must be an edge
    std::vector<int> loose;                // assigned F-vertices sharing an edge with f0
    std::vector<int> thirds;               // pair_joint: assigned t with F-edge {f0,f1,t}
    std::vector<int> complete_edges;       // F-edge indices fully assigned after this step
    int deg0 = 0;
    int deg1 = 0;
};

struct Plan {
    std::vector<PlanStep> steps;
};

std::vector<int> f_degrees(const ThreeGraph& f) {
    std::vector<int> d(f.vertex_count(), 0);
    for (const auto& [a, b, c] : f.edges()) {
        ++d[a];
        ++d[b];
        ++d[c];
    }
    return d;
}

// Decides the assignment order. Preference at each step: an F-vertex that
// completes an edge, then a joint pair that completes two edges, then the
// vertex with the most assigned neighbors, breaking ties by higher degree.
Plan build_plan(const ThreeGraph& f, int root_role) {
    const int nf = f.vertex_count();
    const auto deg = f_degrees(f);
    std::vector<char> assigned(nf, 0);
    int remaining = nf;
    if (root_role >= 0) {
        assigned[root_role] = 1;
        --remaining;
    }

    auto others_assigned = [&](const Triple& e, int skip) {
        for (int v : e)
            if (v != skip && !assigned[v]) return false;
        return true;
    };

    Plan plan;
    std::vector<char> edge_done(f.edges().size(), 0);
    auto collect_complete = [&](PlanStep& st) {
        for (std::size_t ei = 0; ei < f.edges().size(); ++ei) {
            if (edge_done[ei]) continue;
            const auto& e = f.edges()[ei];
            if (assigned[e[0]] && assigned[e[1]] && assigned[e[2]]) {
                edge_done[ei] = 1;
                st.complete_edges.push_back(static_cast<int>(ei));
            }
        }
    };

    while (remaining > 0) {
        // Strongest single choice: edges with only this vertex missing.
        int best = -1, best_strength = 0;
        for (int v = 0; v < nf; ++v) {
            if (assigned[v]) continue;
            int s = 0;
            for (const auto& e : f.edges())
                if ((e[0] == v || e[1] == v || e[2] == v) && others_assigned(e, v)) ++s;
            if (best < 0 || s > best_strength ||
                (s == best_strength && (deg[v] > deg[best] || (deg[v] == deg[best] && v < best)))) {
                best = v;
                best_strength = s;
            }
        }

        if (best_strength == 0) {
            // Joint pair: two unassigned vertices sharing >= 2 edges whose
            // third vertices are all assigned.
            int pf = -1, pg = -1;
            std::vector<int> pthirds;
            for (int x = 0; x < nf && pf < 0; ++x) {
                if (assigned[x]) continue;
                for (int y = x + 1; y < nf && pf < 0; ++y) {
                    if (assigned[y]) continue;
                    std::vector<int> thirds;
                    for (const auto& e : f.edges()) {
                        int third = -1;
                        int hit = 0;
                        for (int v : e) {
                            if (v == x || v == y) ++hit;
                            else third = v;
                        }
                        if (hit == 2 && third >= 0 && assigned[third]) thirds.push_back(third);
                    }
                    if (thirds.size() >= 2) {
                        pf = x;
                        pg = y;
                        pthirds = std::move(thirds);
                    }
                }
            }
            if (pf >= 0) {
                PlanStep st;
                st.kind = PlanStep::Kind::pair_joint;
                st.f0 = pf;
                st.f1 = pg;
                st.thirds = std::move(pthirds);
                st.deg0 = deg[pf];
                st.deg1 = deg[pg];
                assigned[pf] = assigned[pg] = 1;
                remaining -= 2;
                collect_complete(st);
                plan.steps.push_back(std::move(st));
                continue;
            }
            // Extend along an F-edge with exactly one assigned vertex: both
            // missing vertices come from one walk over the host edges at the
            // anchor's image, so dead ends surface immediately.
            bool extended = false;
            for (const auto& e : f.edges()) {
                int anchor = -1, u0 = -1, u1 = -1;
                bool two_assigned = false;
                for (int v : e) {
                    if (assigned[v]) {
                        two_assigned = anchor >= 0;
                        anchor = v;
                    } else {
                        (u0 < 0 ? u0 : u1) = v;
                    }
                }
                if (anchor < 0 || two_assigned) continue;
                PlanStep st;
                st.kind = PlanStep::Kind::edge_extend;
                st.f0 = u0;
                st.f1 = u1;
                st.anchor = anchor;
                st.deg0 = deg[u0];
                st.deg1 = deg[u1];
                assigned[u0] = assigned[u1] = 1;
                remaining -= 2;
                collect_complete(st);
                plan.steps.push_back(std::move(st));
                extended = true;
                break;
            }
            if (extended) continue;
            // Fall back to the vertex with the most assigned neighbors.
            int bn = -1, bn_count = -1;
            for (int v = 0; v < nf; ++v) {
                if (assigned[v]) continue;
                std::vector<char> seen(nf, 0);
                int cnt = 0;
                for (const auto& e : f.edges()) {
                    if (e[0] != v && e[1] != v && e[2] != v) continue;
                    for (int w : e)
                        if (w != v && assigned[w] && !seen[w]) {
                            seen[w] = 1;
                            ++cnt;
                        }
                }
                if (cnt > bn_count || (cnt == bn_count && deg[v] > deg[bn])) {
                    bn = v;
                    bn_count = cnt;
                }
            }
            best = bn;
        }

        PlanStep st;
        st.f0 = best;
        st.deg0 = deg[best];
        for (const auto& e : f.edges()) {
            if (e[0] != best && e[1] != best && e[2] != best) continue;
            int a = -1, b = -1;
            for (int v : e)
                if (v != best) (a < 0 ? a : b) = v;
            if (assigned[a] && assigned[b]) st.exact.push_back({a, b});
            else if (assigned[a]) st.loose.push_back(a);
            else if (assigned[b]) st.loose.push_back(b);
        }
        std::sort(st.loose.begin(), st.loose.end());
        st.loose.erase(std::unique(st.loose.begin(), st.loose.end()), st.loose.end());
        assigned[best] = 1;
        --remaining;
        collect_complete(st);
        plan.steps.push_back(std::move(st));
    }
    return plan;
}

struct Runner {
    const ThreeGraph& host;
    const ThreeGraph& f;
    const ThreeGraph::Adjacency& adj;
    const Plan& plan;
    std::vector<int> image;
    std::vector<char> used;
    bool count_all = false;
    std::int64_t count = 0;
    bool found = false;
    Embedding result;

    Runner(const ThreeGraph& host_, const ThreeGraph& f_, const Plan& plan_)
        : host(host_), f(f_), adj(host_.adjacency()), plan(plan_),
          image(f_.vertex_count(), -1), used(host_.vertex_count(), 0) {}

    bool edges_ok(const PlanStep& st) const {
        for (int ei : st.complete_edges) {
            const auto& e = f.edges()[ei];
            if (!host.has_edge(image[e[0]], image[e[1]], image[e[2]])) return false;
        }
        return true;
    }

    bool accept() {
        if (count_all) {
            ++count;
            return false; // keep searching
        }
        found = true;
        result = image; // snapshot before the unwind rolls assignments back
        return true;
    }

    bool run(std::size_t depth) {
        if (depth == plan.steps.size()) return accept();
        const PlanStep& st = plan.steps[depth];
        switch (st.kind) {
            case PlanStep::Kind::single: return run_single(depth, st);
            case PlanStep::Kind::pair_joint: return run_pair(depth, st);
            case PlanStep::Kind::edge_extend: return run_edge_extend(depth, st);
        }
        return false;
    }

    bool try_assign_single(std::size_t depth, const PlanStep& st, int w) {
        if (used[w] || adj.vertex_degree[w] < st.deg0) return false;
        image[st.f0] = w;
        used[w] = 1;
        bool stop = edges_ok(st) && run(depth + 1);
        used[w] = 0;
        image[st.f0] = -1;
        return stop;
    }

    bool run_single(std::size_t depth, const PlanStep& st) {
        const int n = host.vertex_count();
        if (adj.pair_masks_built && !st.exact.empty()) {
            Bitset cand = adj.pair_adj[host_pair_rank(st.exact[0])];
            for (std::size_t i = 1; i < st.exact.size(); ++i)
                cand &= adj.pair_adj[host_pair_rank(st.exact[i])];
            for (int a : st.loose) cand &= adj.nbr[image[a]];
            bool stop = false;
            cand.for_each([&](std::int64_t w) {
                if (!stop) stop = try_assign_single(depth, st, static_cast<int>(w));
            });
            return stop;
        }
        if (!st.loose.empty() || !st.exact.empty()) {
            Bitset cand = !st.loose.empty() ? adj.nbr[image[st.loose[0]]] : adj.nbr[image[st.exact[0][0]]];
            for (std::size_t i = 1; i < st.loose.size(); ++i) cand &= adj.nbr[image[st.loose[i]]];
            for (const auto& [a, b] : st.exact) {
                cand &= adj.nbr[image[a]];
                cand &= adj.nbr[image[b]];
            }
            bool stop = false;
            cand.for_each([&](std::int64_t w) {
                if (stop) return;
                for (const auto& [a, b] : st.exact)
                    if (!host.has_edge(image[a], image[b], static_cast<int>(w))) return;
                stop = try_assign_single(depth, st, static_cast<int>(w));
            });
            return stop;
        }
        for (int w = 0; w < n; ++w)
            if (try_assign_single(depth, st, w)) return true;
        return false;
    }

    std::int64_t host_pair_rank(const std::array<int, 2>& fpair) const {
        int a = image[fpair[0]], b = image[fpair[1]];
        if (a > b) std::swap(a, b);
        return pair_rank(a, b);
    }

    bool try_assign_pair(std::size_t depth, const PlanStep& st, int x, int y) {
        if (used[x] || used[y]) return false;
        if (adj.vertex_degree[x] < st.deg0 || adj.vertex_degree[y] < st.deg1) return false;
        image[st.f0] = x;
        image[st.f1] = y;
        used[x] = used[y] = 1;
        bool stop = edges_ok(st) && run(depth + 1);
        used[x] = used[y] = 0;
        image[st.f0] = image[st.f1] = -1;
        return stop;
    }

    bool run_edge_extend(std::size_t depth, const PlanStep& st) {
        const int hv = image[st.anchor];
        for (std::int32_t ei : adj.incident[hv]) {
            const auto& [a, b, c] = host.edges()[ei];
            int u0, u1;
            if (a == hv) {
                u0 = b;
                u1 = c;
            } else if (b == hv) {
                u0 = a;
                u1 = c;
            } else {
                u0 = a;
                u1 = b;
            }
            if (try_assign_pair(depth, st, u0, u1) || try_assign_pair(depth, st, u1, u0)) return true;
        }
        return false;
    }

    bool run_pair(std::size_t depth, const PlanStep& st) {
        if (adj.pair_masks_built) {
            Bitset cand = adj.link[image[st.thirds[0]]];
            for (std::size_t i = 1; i < st.thirds.size(); ++i) cand &= adj.link[image[st.thirds[i]]];
            bool stop = false;
            cand.for_each([&](std::int64_t r) {
                if (stop) return;
                auto [x, y] = pair_unrank(r);
                stop = try_assign_pair(depth, st, x, y) || try_assign_pair(depth, st, y, x);
            });
            return stop;
        }
        const int n = host.vertex_count();
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                bool ok = true;
                for (int t : st.thirds)
                    if (!host.has_edge(image[t], x, y)) {
                        ok = false;
                        break;
                    }
                if (ok && try_assign_pair(depth, st, x, y)) return true;
            }
        }
        return false;
    }
};

std::optional<Embedding> run_rooted(const ThreeGraph& host, const ThreeGraph& f, int root, int role) {
    Plan plan = build_plan(f, role);
    Runner runner(host, f, plan);
    const auto deg = f_degrees(f);
    if (runner.adj.vertex_degree[root] < deg[role]) return std::nullopt;
    runner.image[role] = root;
    runner.used[root] = 1;
    if (runner.run(0)) return runner.result;
    return std::nullopt;
}

// Roles in the same automorphism orbit give identical rooted searches, so
// only orbit representatives are tried. Memoized: the catalog patterns
// account for nearly every call.
std::vector<int> rooted_role_representatives(const ThreeGraph& f) {
    const int nf = f.vertex_count();
    if (nf > 8) {
        std::vector<int> all(nf);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    static std::mutex mutex;
    static std::map<std::pair<int, std::vector<Triple>>, std::vector<int>> cache;
    std::pair<int, std::vector<Triple>> key{nf, f.edges()};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<int> orbit(nf);
    std::iota(orbit.begin(), orbit.end(), 0);
    auto find = [&](int v) {
        while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
        return v;
    };
    std::vector<int> perm(nf);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool is_aut = true;
        for (const auto& [a, b, c] : f.edges())
            if (!f.has_edge(perm[a], perm[b], perm[c])) {
                is_aut = false;
                break;
            }
        if (is_aut)
            for (int v = 0; v < nf; ++v) orbit[std::max(find(v), find(perm[v]))] = std::min(find(v), find(perm[v]));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<int> reps;
    for (int v = 0; v < nf; ++v)
        if (find(v) == v) reps.push_back(v);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(std::move(key), reps);
    return reps;
}

} // namespace

bool embedding_is_valid(const ThreeGraph& host, const ThreeGraph& f, const Embedding& e) {
    if (static_cast<int>(e.size()) != f.vertex_count()) return false;
    std::vector<char> used(host.vertex_count(), 0);
    for (int w : e) {
        if (w < 0 || w >= host.vertex_count() || used[w]) return false;
        used[w] = 1;
    }
    for (const auto& [a, b, c] : f.edges())
        if (!host.has_edge(e[a], e[b], e[c])) return false;
    return true;
}

std::optional<Embedding> find_rooted_copy(const ThreeGraph& host, const ThreeGraph& f, int root) {
    if (root < 0 || root >= host.vertex_count()) throw std::invalid_argument("root vertex out of range");
    if (f.vertex_count() > host.vertex_count()) return std::nullopt;
    if (f.vertex_count() == 0) return std::nullopt;
    for (int role : rooted_role_representatives(f))
        if (auto e = run_rooted(host, f, root, role)) return e;
    return std::nullopt;
}

std::optional<Embedding> find_any_copy(const ThreeGraph& host, const ThreeGraph& f) {
    if (f.vertex_count() > host.vertex_count()) return std::nullopt;
    if (f.vertex_count() == 0) return Embedding{};
    Plan plan = build_plan(f, -1);
    Runner runner(host, f, plan);
    if (runner.run(0)) return runner.result;
    return std::nullopt;
}

bool is_free(const ThreeGraph& host, const ThreeGraph& f) { return !find_any_copy(host, f).has_value(); }

std::int64_t count_labeled_copies(const ThreeGraph& host, const ThreeGraph& f) {
    if (host.vertex_count() > 12)
        throw std::invalid_argument("exhaustive copy counting is capped at 12 host vertices");
    if (f.vertex_count() > host.vertex_count()) return 0;
    if (f.vertex_count() == 0) return 1;
    Plan plan = build_plan(f, -1);
    Runner runner(host, f, plan);
    runner.count_all = true;
    runner.run(0);
    return runner.count;
}

bool is_connected(const ThreeGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [a, b, c] : g.edges()) {
        parent[find(a)] = find(b);
        parent[find(b)] = find(c);
    }
    int r = find(0);
    for (int v = 1; v < n; ++v)
        if (find(v) != r) return false;
    return true;
}

CoverageReport has_covering(const ThreeGraph& host, const ThreeGraph& f, bool want_witnesses) {
    CoverageReport report;
    report.n = host.vertex_count();
    report.covered.assign(host.vertex_count(), 0);
    if (want_witnesses) report.witnesses.resize(host.vertex_count());
    for (int v = 0; v < host.vertex_count(); ++v) {
        auto e = find_rooted_copy(host, f, v);
        report.covered[v] = e.has_value();
        if (!e) report.uncovered.push_back(v);
        else if (want_witnesses) report.witnesses[v] = std::move(e);
    }
    return report;
}

CoverageReport has_covering(const ThreeGraph& host, PatternId id, bool want_witnesses) {
    CoverageReport report = has_covering(host, pattern(id).graph, want_witnesses);
    report.pattern = id;
    return report;
}

} // namespace hypercover
