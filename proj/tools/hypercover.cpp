// hypercover: 3-uniform hypergraph covering-threshold toolkit.
//
// Subcommands: construct, check, analyze, threshold, verify.
// Exit codes: 0 success, 1 operational error, 2 usage error,
// 3 verification failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypercover/constructions.hpp"
#include "hypercover/embedding.hpp"
#include "hypercover/graph_analysis.hpp"
#include "hypercover/io.hpp"
#include "hypercover/threshold.hpp"

using json = nlohmann::json;
using namespace hypercover;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

int env_threads() {
    if (const char* env = std::getenv("HYPERCOVER_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

PatternId require_pattern(const std::string& name) {
    auto id = pattern_from_name(name);
    if (!id) throw CLI::ValidationError("--pattern", "unknown pattern '" + name + "'");
    return *id;
}

json graph_to_json(const ThreeGraph& g) { return json::parse(serialize_three_graph_json(g)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// splitmix64, the toolkit-wide seeded generator for reproducible corpora.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::size_t below(std::uint64_t k) {
        return static_cast<std::size_t>((static_cast<unsigned __int128>(next()) * k) >> 64);
    }
};

// ---------------------------------------------------------------------------
// construct

int run_construct(const std::string& family, int n, const std::string& out) {
    Construction c = [&] {
        if (family == "f5") return construct_f5_lower(n);
        if (family == "lp3" || family == "gp3") return construct_trivial_intersecting(n);
        if (family == "tp3") return construct_tp3_lower(n);
        if (family == "k113") return construct_k113_lower(n);
        if (family == "s3") return construct_s3_lower(n);
        if (family == "gs3") return construct_gs3_lower(n);
        if (family == "turan3") return construct_turan_3partite(n);
        throw CLI::ValidationError("--family", "unknown family '" + family + "'");
    }();
    if (!out.empty()) save_three_graph(c.graph, out);
    json j{{"family", family},
           {"n", n},
           {"edge_count", c.graph.edge_count()},
           {"min_degree", c.graph.min_degree(1)},
           {"designated_vertex", nullptr}};
    if (c.designated_vertex) j["designated_vertex"] = *c.designated_vertex;
    if (!out.empty()) j["out"] = out;
    std::cout << j.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// check

int run_check(const std::string& pattern_name_arg, const std::string& path, int vertex,
              bool want_witnesses, bool as_json) {
    PatternId id = require_pattern(pattern_name_arg);
    ThreeGraph h = load_three_graph(path);

    if (vertex >= 0) {
        if (vertex >= h.vertex_count()) {
            std::cerr << "error: vertex " << vertex << " out of range\n";
            return 1;
        }
        auto e = find_rooted_copy(h, pattern(id).graph, vertex);
        if (as_json) {
            json j{{"pattern", pattern_name(id)},
                   {"n", h.vertex_count()},
                   {"vertex", vertex},
                   {"covered", e.has_value()}};
            if (e && want_witnesses) j["witness"] = *e;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "vertex " << vertex << ": " << (e ? "covered" : "uncovered") << "\n";
            if (e && want_witnesses) {
                std::cout << "witness:";
                for (int w : *e) std::cout << " " << w;
                std::cout << "\n";
            }
        }
        return 0;
    }

    CoverageReport report = has_covering(h, id, want_witnesses);
    bool free = report.uncovered.size() == static_cast<std::size_t>(h.vertex_count());
    if (as_json) {
        json j{{"pattern", pattern_name(id)},
               {"n", report.n},
               {"covered", json::array()},
               {"uncovered", report.uncovered},
               {"all_covered", report.all_covered()},
               {"free", free}};
        for (auto c : report.covered) j["covered"].push_back(static_cast<bool>(c));
        if (want_witnesses) {
            json w = json::object();
            for (int v = 0; v < report.n; ++v)
                if (report.witnesses[v]) w[std::to_string(v)] = *report.witnesses[v];
            j["witnesses"] = std::move(w);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "pattern: " << pattern_name(id) << "\n"
                  << "n: " << report.n << "\n"
                  << "covered: " << (report.n - static_cast<int>(report.uncovered.size())) << "/"
                  << report.n << "\n";
        std::cout << "uncovered:";
        for (int v : report.uncovered) std::cout << " " << v;
        std::cout << "\n";
        std::cout << "free: " << (free ? "true" : "false") << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// analyze

int run_analyze(const std::string& op, const std::string& path, int s, bool as_json) {
    Graph2 g = load_graph2(path);
    if (op == "cng") {
        Graph2 cng = common_neighbor_graph(g);
        std::cout << (as_json ? serialize_graph2_json(cng) + "\n" : serialize_graph2(cng));
        return 0;
    }
    if (op == "lemma22") {
        bool holds = satisfies_common_neighbor_bound(g);
        auto cng_edges = common_neighbor_graph(g).edge_count();
        if (as_json) {
            json j{{"edges", g.edge_count()},
                   {"cng_edges", cng_edges},
                   {"n", g.vertex_count()},
                   {"holds", holds}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "|E(G)|=" << g.edge_count() << " |E(cng)|=" << cng_edges
                      << " holds: " << (holds ? "true" : "false") << "\n";
        }
        return 0;
    }
    if (op == "matching") {
        int nu = max_matching_size(g);
        if (as_json) std::cout << json{{"nu", nu}}.dump() << "\n";
        else std::cout << "nu: " << nu << "\n";
        return 0;
    }
    if (op == "tutte-berge") {
        if (s < 0) throw CLI::ValidationError("--s", "tutte-berge requires --s");
        auto cert = tutte_berge_certificate(g, s);
        if (as_json) {
            json j{{"s", s}, {"exists", cert.has_value()}};
            if (cert) {
                j["b"] = cert->b;
                j["components"] = cert->components;
            }
            std::cout << j.dump() << "\n";
        } else if (cert) {
            std::cout << "certificate for s=" << s << "\nB:";
            for (int v : cert->b) std::cout << " " << v;
            std::cout << "\ncomponents:";
            for (const auto& comp : cert->components) {
                std::cout << " {";
                for (std::size_t i = 0; i < comp.size(); ++i) std::cout << (i ? "," : "") << comp[i];
                std::cout << "}";
            }
            std::cout << "\n";
        } else {
            std::cout << "no certificate: a matching larger than " << s << " exists (or s > n)\n";
        }
        return 0;
    }
    throw CLI::ValidationError("--op", "unknown op '" + op + "'");
}

// ---------------------------------------------------------------------------
// threshold

const char* method_name(SearchMethod m) {
    switch (m) {
        case SearchMethod::exhaustive: return "exhaustive";
        case SearchMethod::naive_oracle: return "naive-oracle";
        case SearchMethod::probe_lower_bound: return "probe-lower-bound";
    }
    return "?";
}

int run_threshold(const std::string& pattern_name_arg, int n, int i, const std::string& method,
                  int threads, std::int64_t budget, std::uint64_t seed, int trials,
                  std::int64_t floor, const std::string& out) {
    PatternId id = require_pattern(pattern_name_arg);
    auto t0 = std::chrono::steady_clock::now();
    ThresholdResult r = [&] {
        if (method == "oracle") return naive_threshold_oracle(id, n, i);
        if (method == "probe") return probe_lower_bound(id, n, i, trials, seed);
        if (method != "exhaustive")
            throw CLI::ValidationError("--method", "unknown method '" + method + "'");
        SearchConfig cfg;
        cfg.threads = threads;
        cfg.node_budget = budget;
        cfg.value_floor = floor;
        return exact_threshold(id, n, i, cfg);
    }();
    json j{{"pattern", pattern_name(id)},
           {"n", r.n},
           {"i", r.i},
           {"value", r.value},
           {"method", method_name(r.method)},
           {"nodes_explored", r.nodes_explored},
           {"degenerate", r.degenerate},
           {"complete", r.complete},
           {"designated_vertex", r.designated_vertex},
           {"witness", graph_to_json(r.witness)},
           {"seed", seed},
           {"wall_time_s", seconds_since(t0)}};
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "error: cannot write " << out << "\n";
            return 1;
        }
        f << j.dump(2) << "\n";
    }
    std::cout << j.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyRecord {
    std::string id;
    std::string statement;
    bool pass = false;
    std::string measured;
    double runtime_s = 0;
};

struct VerifyReport {
    std::vector<VerifyRecord> records;
    std::uint64_t seed = kDefaultSeed;
    int threads = 1;

    void add(std::string id, std::string statement, bool pass, std::string measured, double dt) {
        records.push_back({std::move(id), std::move(statement), pass, std::move(measured), dt});
    }
    int failed() const {
        int f = 0;
        for (const auto& r : records) f += !r.pass;
        return f;
    }
};

struct Range {
    int from = -1;
    int to = -1;
    bool empty_requested() const { return from >= 0 && to >= 0 && from > to; }
    // intersect a scope's natural range with the user-provided one
    std::pair<int, int> clamp(int lo, int hi) const {
        int a = from >= 0 ? std::max(lo, from) : lo;
        int b = to >= 0 ? std::min(hi, to) : hi;
        return {a, b};
    }
};

void verify_tightness(VerifyReport& rep, PatternId id, const Range& range) {
    const int valid_from = claimed_c1(id, kMaxVertices).valid_from;
    auto [lo, hi] = range.clamp(valid_from, 200);
    for (int n = lo; n <= hi; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        auto claim = claimed_c1(id, n);
        auto c = construction_for(id, n);
        std::int64_t delta = c->graph.min_degree(1);
        bool tight = delta == claim.value;
        bool uncovered = !find_rooted_copy(c->graph, pattern(id).graph, *c->designated_vertex);
        std::string name(pattern_name(id));
        rep.add(name + "-tightness/n=" + std::to_string(n),
                "construction delta1 equals claimed c1(n," + name + ") and designated vertex uncovered",
                tight && uncovered,
                "delta1=" + std::to_string(delta) + " claimed=" + std::to_string(claim.value) +
                    " uncovered=" + (uncovered ? "true" : "false"),
                seconds_since(t0));
    }
}

void verify_f5(VerifyReport& rep, const Range& range) {
    auto [lo, hi] = range.clamp(5, 300);
    for (int n = lo; n <= hi; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        auto c = construct_f5_lower(n);
        std::int64_t delta = c.graph.min_degree(1);
        bool above = exceeds_f5_lower_bound(n, delta);
        bool uncovered = !find_rooted_copy(c.graph, pattern(PatternId::f5).graph, 0);
        rep.add("f5-lower/n=" + std::to_string(n),
                "construction delta1 exceeds n^2/8 - sqrt(2) n and the join vertex is f5-uncovered",
                above && uncovered,
                "delta1=" + std::to_string(delta) + " floor=" + std::to_string(f5_threshold_floor(n)) +
                    " uncovered=" + (uncovered ? "true" : "false"),
                seconds_since(t0));
    }
}

void verify_turan(VerifyReport& rep, const Range& range) {
    auto [lo, hi] = range.clamp(3, 300);
    for (int n = lo; n <= hi; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        auto c = construct_turan_3partite(n);
        std::int64_t expect = static_cast<std::int64_t>(n / 3) * ((n + 1) / 3) * ((n + 2) / 3);
        bool count_ok = c.graph.edge_count() == expect;
        bool free_ok = n > 40 || is_free(c.graph, pattern(PatternId::f5).graph);
        rep.add("turan3/n=" + std::to_string(n),
                "balanced 3-partite graph has floor(n/3)floor((n+1)/3)floor((n+2)/3) edges and no f5",
                count_ok && free_ok,
                "edges=" + std::to_string(c.graph.edge_count()) + " expected=" + std::to_string(expect) +
                    (n <= 40 ? std::string(" free=") + (free_ok ? "true" : "false")
                             : std::string(" free=skipped")),
                seconds_since(t0));
    }
}

void verify_lemma22(VerifyReport& rep, const Range& range, std::uint64_t seed) {
    auto [lo, hi] = range.clamp(1, 30);
    if (lo > hi) return;
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    int failures = 0;
    const int kCorpus = 1000;
    for (int t = 0; t < kCorpus; ++t) {
        int n = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
        std::uint32_t num = 1 + static_cast<std::uint32_t>(rng.below(4));
        std::vector<Pair> edges;
        for (std::int64_t r = 0; r < binom(n, 2); ++r)
            if (rng.below(5) < num) edges.push_back(pair_unrank(r));
        failures += !satisfies_common_neighbor_bound(Graph2(n, std::move(edges)));
    }
    rep.add("common-neighbor-bound/corpus",
            "2|E(cng(G))| >= 2|E(G)| - n over " + std::to_string(kCorpus) + " seeded graphs",
            failures == 0, "failures=" + std::to_string(failures) + " seed=" + std::to_string(seed),
            seconds_since(t0));
}

void verify_search(VerifyReport& rep, const Range& range, int threads) {
    auto [lo, hi] = range.clamp(4, 6);
    for (int n = lo; n <= hi; ++n) {
        for (PatternId id : kAllPatterns) {
            for (int i : {1, 2}) {
                auto t0 = std::chrono::steady_clock::now();
                SearchConfig cfg;
                cfg.threads = threads;
                auto exact = exact_threshold(id, n, i, cfg);
                auto naive = naive_threshold_oracle(id, n, i);
                bool agree = exact.value == naive.value && exact.witness == naive.witness;
                std::string name(pattern_name(id));
                rep.add("search-oracle/" + name + "/n=" + std::to_string(n) + "/i=" + std::to_string(i),
                        "branch-and-bound search equals subset-enumeration oracle", agree,
                        "exact=" + std::to_string(exact.value) + " oracle=" + std::to_string(naive.value),
                        seconds_since(t0));
            }
        }
    }
    if (lo <= 6 && 6 <= hi) {
        auto t0 = std::chrono::steady_clock::now();
        auto tp3 = exact_threshold(PatternId::tp3, 6, 1);
        rep.add("search-known/tp3/n=6/i=1", "c1(6,tp3) = 4", tp3.value == 4,
                "value=" + std::to_string(tp3.value), seconds_since(t0));
        t0 = std::chrono::steady_clock::now();
        auto c6 = naive_threshold_oracle(PatternId::c6, 6, 2);
        rep.add("search-known/c6/n=6/i=2", "c2(6,c6) = 1", c6.value == 1,
                "value=" + std::to_string(c6.value), seconds_since(t0));
    }
}

int run_verify(const std::string& scope_csv, Range range, int threads, std::uint64_t seed,
               bool as_json, const std::string& out) {
    std::vector<std::string> scopes;
    {
        std::string cur;
        for (char ch : scope_csv + ",") {
            if (ch == ',') {
                if (!cur.empty()) scopes.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
            }
        }
    }
    auto in_scope = [&](const std::string& s) {
        for (const auto& x : scopes)
            if (x == "all" || x == s) return true;
        return false;
    };
    static const std::vector<std::string> kKnown{"all", "f5",  "lp3",    "tp3",     "gp3",   "k113",
                                                 "s3",  "gs3", "turan3", "lemma22", "search"};
    for (const auto& s : scopes)
        if (std::find(kKnown.begin(), kKnown.end(), s) == kKnown.end())
            throw CLI::ValidationError("--scope", "unknown scope '" + s + "'");

    VerifyReport rep;
    rep.seed = seed;
    rep.threads = threads;
    if (!range.empty_requested()) {
        if (in_scope("lp3")) verify_tightness(rep, PatternId::lp3, range);
        if (in_scope("tp3")) verify_tightness(rep, PatternId::tp3, range);
        if (in_scope("gp3")) verify_tightness(rep, PatternId::gp3, range);
        if (in_scope("k113")) verify_tightness(rep, PatternId::k113, range);
        if (in_scope("s3")) verify_tightness(rep, PatternId::s3, range);
        if (in_scope("gs3")) verify_tightness(rep, PatternId::gs3, range);
        if (in_scope("f5")) verify_f5(rep, range);
        if (in_scope("turan3")) verify_turan(rep, range);
        if (in_scope("lemma22")) verify_lemma22(rep, range, seed);
        if (in_scope("search")) verify_search(rep, range, threads);
    }

    int failed = rep.failed();
    if (as_json || !out.empty()) {
        json j{{"seed", rep.seed},
               {"threads", rep.threads},
               {"passed", static_cast<int>(rep.records.size()) - failed},
               {"failed", failed},
               {"records", json::array()}};
        for (const auto& r : rep.records)
            j["records"].push_back({{"id", r.id},
                                    {"statement", r.statement},
                                    {"status", r.pass ? "pass" : "fail"},
                                    {"measured", r.measured},
                                    {"runtime_s", r.runtime_s}});
        if (!out.empty()) {
            std::ofstream f(out);
            if (!f) {
                std::cerr << "error: cannot write " << out << "\n";
                return 1;
            }
            f << j.dump(2) << "\n";
        }
        if (as_json) std::cout << j.dump() << "\n";
    }
    if (!as_json) {
        for (const auto& r : rep.records)
            std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.id << "  " << r.measured << "\n";
        std::cout << rep.records.size() << " checks, " << failed << " failed (seed " << rep.seed
                  << ")\n";
    }
    return failed == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-uniform hypergraph covering-threshold toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "generate an extremal construction");
    std::string family, construct_out;
    int construct_n = 0;
    construct->add_option("--family", family, "f5|lp3|tp3|gp3|k113|s3|gs3|turan3")->required();
    construct->add_option("--n", construct_n, "vertex count")->required();
    construct->add_option("--out", construct_out, "output file (.h3 or .json)");

    // check
    auto* check = app.add_subcommand("check", "coverage / freeness of a pattern in a graph");
    std::string check_pattern, check_graph;
    int check_vertex = -1;
    bool check_witnesses = false, check_json = false;
    check->add_option("--pattern", check_pattern, "pattern name")->required();
    check->add_option("--graph", check_graph, "3-graph file")->required();
    check->add_option("--vertex", check_vertex, "restrict to one root vertex");
    check->add_flag("--witnesses", check_witnesses, "include witness embeddings");
    check->add_flag("--json", check_json, "JSON output");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "2-graph analysis");
    std::string analyze_op, analyze_graph;
    int analyze_s = -1;
    bool analyze_json = false;
    analyze->add_option("--op", analyze_op, "cng|lemma22|matching|tutte-berge")->required();
    analyze->add_option("--graph", analyze_graph, "2-graph file")->required();
    analyze->add_option("--s", analyze_s, "matching bound for tutte-berge");
    analyze->add_flag("--json", analyze_json, "JSON output");

    // threshold
    auto* threshold = app.add_subcommand("threshold", "compute c_i(n,F) at desk scale");
    std::string th_pattern, th_method = "exhaustive", th_out;
    int th_n = 0, th_i = 1, th_threads = env_threads(), th_trials = 20;
    std::int64_t th_budget = 0, th_floor = 0;
    std::uint64_t th_seed = kDefaultSeed;
    threshold->add_option("--pattern", th_pattern, "pattern name")->required();
    threshold->add_option("--n", th_n, "vertex count")->required();
    threshold->add_option("--i", th_i, "degree arity (1 or 2)")->required();
    threshold->add_option("--method", th_method, "exhaustive|oracle|probe");
    threshold->add_option("--threads", th_threads, "worker threads");
    threshold->add_option("--budget", th_budget, "node budget (0 = unlimited)");
    threshold->add_option("--seed", th_seed, "probe seed");
    threshold->add_option("--trials", th_trials, "probe restarts");
    threshold->add_option("--floor", th_floor, "incumbent value floor");
    threshold->add_option("--out", th_out, "write result JSON here");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check the claimed results");
    std::string v_scope = "all", v_out;
    Range v_range;
    int v_threads = env_threads();
    std::uint64_t v_seed = kDefaultSeed;
    bool v_json = false;
    verify->add_option("--scope", v_scope,
                       "all or comma list: f5,lp3,tp3,gp3,k113,s3,gs3,turan3,lemma22,search");
    verify->add_option("--n-from", v_range.from, "lower end of the n range");
    verify->add_option("--n-to", v_range.to, "upper end of the n range");
    verify->add_option("--threads", v_threads, "worker threads");
    verify->add_option("--seed", v_seed, "corpus seed");
    verify->add_flag("--json", v_json, "JSON output");
    verify->add_option("--out", v_out, "write report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*construct) return run_construct(family, construct_n, construct_out);
        if (*check) return run_check(check_pattern, check_graph, check_vertex, check_witnesses, check_json);
        if (*analyze) return run_analyze(analyze_op, analyze_graph, analyze_s, analyze_json);
        if (*threshold)
            return run_threshold(th_pattern, th_n, th_i, th_method, th_threads, th_budget, th_seed,
                                 th_trials, th_floor, th_out);
        if (*verify) return run_verify(v_scope, v_range, v_threads, v_seed, v_json, v_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
