#include "hypercover/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hypercover {
namespace {

constexpr int kAutomorphismCap = 10;

Pattern make(PatternId id, std::string_view name, int n, std::vector<Triple> edges) {
    ThreeGraph g(n, std::move(edges));
    int aut = static_cast<int>(automorphism_count(g));
    return Pattern{id, name, std::move(g), aut};
}

const std::array<Pattern, 9>& catalog() {
    static const std::array<Pattern, 9> patterns{
        make(PatternId::k4_minus, "k4-", 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}),
        make(PatternId::c6, "c6", 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}),
        make(PatternId::f5, "f5", 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}),
        make(PatternId::lp3, "lp3", 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}),
        make(PatternId::tp3, "tp3", 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}),
        make(PatternId::gp3, "gp3", 6, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}}),
        make(PatternId::k113, "k113", 5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}),
        make(PatternId::s3, "s3", 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}),
        make(PatternId::gs3, "gs3", 6, {{0, 1, 2}, {0, 1, 3}, {0, 4, 5}}),
    };
    return patterns;
}

} // namespace

const Pattern& pattern(PatternId id) {
    for (const auto& p : catalog())
        if (p.id == id) return p;
    throw std::invalid_argument("unknown pattern id");
}

std::string_view pattern_name(PatternId id) { return pattern(id).name; }

std::optional<PatternId> pattern_from_name(std::string_view name) {
    std::string lower;
    lower.reserve(name.size());
    for (char ch : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (lower == "k4minus") lower = "k4-";
    for (const auto& p : catalog())
        if (p.name == lower) return p.id;
    return std::nullopt;
}

std::int64_t automorphism_count(const ThreeGraph& f) {
    int n = f.vertex_count();
    if (n > kAutomorphismCap)
        throw std::invalid_argument("automorphism count is exhaustive; vertex count capped at " +
                                    std::to_string(kAutomorphismCap));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t count = 0;
    do {
        bool ok = true;
        for (const auto& [a, b, c] : f.edges()) {
            if (!f.has_edge(perm[a], perm[b], perm[c])) {
                ok = false;
                break;
            }
        }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool isomorphic(const ThreeGraph& a, const ThreeGraph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (n > kAutomorphismCap)
        throw std::invalid_argument("isomorphism test is exhaustive; vertex count capped at " +
                                    std::to_string(kAutomorphismCap));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& [x, y, z] : a.edges()) {
            if (!b.has_edge(perm[x], perm[y], perm[z])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace hypercover
