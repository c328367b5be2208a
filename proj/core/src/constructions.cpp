#include "hypercover/constructions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypercover {
namespace {

void require_n(int n, int minimum, const char* what) {
    if (n < minimum)
        throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(minimum));
    if (n > kMaxVertices)
        throw std::invalid_argument(std::string(what) + " exceeds the vertex cap");
}

void append_all_triples(std::vector<Triple>& edges, int lo, int hi) {
    for (int c = lo + 2; c < hi; ++c)
        for (int b = lo + 1; b < c; ++b)
            for (int a = lo; a < b; ++a) edges.push_back({a, b, c});
}

Triple sorted(int a, int b, int c) {
    Triple t{a, b, c};
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    if (t[1] > t[2]) std::swap(t[1], t[2]);
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    return t;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

} // namespace

std::int64_t isqrt(std::int64_t x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative value");
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

Construction construct_f5_lower(int n) {
    require_n(n, 5, "construct_f5_lower");
    const int a = static_cast<int>(isqrt(2ll * n * n) / 4) - 1;
    // u = 0, X = [1, a], Y = [a+1, 2a], Z = [2a+1, n-1].
    const int x_lo = 1, y_lo = 1 + a, z_lo = 1 + 2 * a;
    std::vector<Triple> edges;
    for (int x = x_lo; x < y_lo; ++x)
        for (int y = y_lo; y < z_lo; ++y) {
            edges.push_back(sorted(0, x, y));
            for (int z = z_lo; z < n; ++z) edges.push_back(sorted(z, x, y));
        }
    // Split C(Z,2) alternately in lexicographic order, E_X first.
    bool to_x = true;
    for (int z1 = z_lo; z1 < n; ++z1)
        for (int z2 = z1 + 1; z2 < n; ++z2) {
            if (to_x)
                for (int x = x_lo; x < y_lo; ++x) edges.push_back(sorted(x, z1, z2));
            else
                for (int y = y_lo; y < z_lo; ++y) edges.push_back(sorted(y, z1, z2));
            to_x = !to_x;
        }
    append_all_triples(edges, z_lo, n);
    return {ThreeGraph(n, std::move(edges)), 0};
}

Construction construct_trivial_intersecting(int n) {
    require_n(n, 4, "construct_trivial_intersecting");
    std::vector<Triple> edges;
    for (int b = 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) edges.push_back({0, b, c});
    return {ThreeGraph(n, std::move(edges)), 0};
}

Construction construct_tp3_lower(int n) {
    require_n(n, 6, "construct_tp3_lower");
    std::vector<Triple> edges;
    if (n % 3 != 1) {
        // {n-2, n-1} joined to every lower vertex, plus all lower triples.
        for (int i = 0; i <= n - 3; ++i) edges.push_back({i, n - 2, n - 1});
        append_all_triples(edges, 0, n - 2);
        return {ThreeGraph(n, std::move(edges)), n - 1};
    }
    // n = 3k+1: u = 0 with k blocks of 3; A_i = {3i+1, 3i+2, 3i+3}.
    const int k = (n - 1) / 3;
    auto block = [](int i, int j) { return 3 * i + 1 + j; };
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) edges.push_back({0, block(i, p), block(i, q)});
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                for (int p = 0; p < 3; ++p)
                    for (int q = 0; q < 3; ++q)
                        for (int r = 0; r < 3; ++r)
                            edges.push_back(sorted(block(i, p), block(j, q), block(l, r)));
    return {ThreeGraph(n, std::move(edges)), 0};
}

Construction construct_k113_lower(int n) {
    require_n(n, 9, "construct_k113_lower");
    const int rim = n - 1; // cycle on 0..n-2, hub = n-1
    auto cycle_adjacent = [rim](int a, int b) {
        int d = (b - a + rim) % rim;
        return d == 1 || d == rim - 1;
    };
    std::vector<Triple> edges;
    for (int i = 0; i < rim; ++i) edges.push_back(sorted(i, (i + 1) % rim, n - 1));
    for (int a = 0; a < rim; ++a)
        for (int b = a + 1; b < rim; ++b)
            for (int c = b + 1; c < rim; ++c)
                if (!cycle_adjacent(a, b) && !cycle_adjacent(b, c) && !cycle_adjacent(a, c))
                    edges.push_back({a, b, c});
    return {ThreeGraph(n, std::move(edges)), n - 1};
}

Construction construct_s3_lower(int n) {
    require_n(n, 11, "construct_s3_lower");
    std::vector<Triple> edges;
    for (int b : {n - 3, n - 4})
        for (int i = 0; i <= n - 5; ++i) edges.push_back(sorted(n - 2, b, i));
    for (int x = 0; x <= n - 3; ++x)
        for (int y = x + 1; y <= n - 3; ++y) edges.push_back(sorted(n - 1, x, y));
    return {ThreeGraph(n, std::move(edges)), n - 2};
}

Construction construct_gs3_lower(int n) {
    require_n(n, 13, "construct_gs3_lower");
    // Blocks over [1..n-1]: B_i = {2i+1, 2i+2} (0-indexed i), the last block
    // a singleton when n-1 is odd.
    const int full = (n - 1) / 2;
    const int blocks = (n - 1 + 1) / 2; // ceil((n-1)/2)
    auto block_members = [&](int i) {
        VertexSet m{2 * i + 1};
        if (2 * i + 2 <= n - 1) m.push_back(2 * i + 2);
        return m;
    };
    std::vector<Triple> edges;
    for (int i = 0; i < full; ++i) edges.push_back({0, 2 * i + 1, 2 * i + 2});
    for (int i = 0; i < blocks; ++i)
        for (int j = i + 1; j < blocks; ++j)
            for (int l = j + 1; l < blocks; ++l)
                for (int x : block_members(i))
                    for (int y : block_members(j))
                        for (int z : block_members(l)) edges.push_back(sorted(x, y, z));
    return {ThreeGraph(n, std::move(edges)), 0};
}

Construction construct_turan_3partite(int n) {
    require_n(n, 3, "construct_turan_3partite");
    const int s1 = n / 3, s2 = (n + 1) / 3;
    std::vector<Triple> edges;
    for (int x = 0; x < s1; ++x)
        for (int y = s1; y < s1 + s2; ++y)
            for (int z = s1 + s2; z < n; ++z) edges.push_back({x, y, z});
    return {ThreeGraph(n, std::move(edges)), std::nullopt};
}

std::optional<Construction> construction_for(PatternId id, int n) {
    switch (id) {
        case PatternId::f5: return n >= 5 ? std::optional(construct_f5_lower(n)) : std::nullopt;
        case PatternId::lp3:
        case PatternId::gp3: return n >= 4 ? std::optional(construct_trivial_intersecting(n)) : std::nullopt;
        case PatternId::tp3: return n >= 6 ? std::optional(construct_tp3_lower(n)) : std::nullopt;
        case PatternId::k113: return n >= 9 ? std::optional(construct_k113_lower(n)) : std::nullopt;
        case PatternId::s3: return n >= 11 ? std::optional(construct_s3_lower(n)) : std::nullopt;
        case PatternId::gs3: return n >= 13 ? std::optional(construct_gs3_lower(n)) : std::nullopt;
        default: return std::nullopt;
    }
}

std::int64_t f5_threshold_floor(int n) {
    // floor(n^2/8 - sqrt(2) n) = floor((n^2 - s - 1) / 8) with s = floor(sqrt(128 n^2)),
    // using that 8*sqrt(2)*n is never an integer.
    const std::int64_t s = isqrt(128ll * n * n);
    return floor_div(static_cast<std::int64_t>(n) * n - s - 1, 8);
}

std::int64_t f5_threshold_ceil(int n) {
    return (static_cast<std::int64_t>(n) * n + 10ll * n + 7) / 8;
}

bool exceeds_f5_lower_bound(int n, std::int64_t delta1) {
    // delta1 > n^2/8 - sqrt(2) n  <=>  128 n^2 > (n^2 - 8 delta1)^2 when n^2 >= 8 delta1.
    const std::int64_t t = static_cast<std::int64_t>(n) * n - 8 * delta1;
    if (t < 0) return true;
    return 128ll * n * n > t * t;
}

ClaimedBound claimed_c1(PatternId id, int n) {
    ClaimedBound b;
    b.pattern = id;
    b.n = n;
    switch (id) {
        case PatternId::f5:
            b.valid_from = 5;
            if (n >= 5) {
                b.kind = BoundKind::open_interval;
                b.lower = f5_threshold_floor(n);
                b.upper = f5_threshold_ceil(n);
            }
            return b;
        case PatternId::lp3:
            b.valid_from = 13;
            if (n >= 13) {
                b.kind = BoundKind::exact;
                b.value = n - 2;
            }
            return b;
        case PatternId::tp3:
            b.valid_from = 6;
            if (n >= 6) {
                b.kind = BoundKind::exact;
                b.value = (n % 3 == 1) ? n - 1 : n - 2;
            }
            return b;
        case PatternId::gp3:
            b.valid_from = 14;
            if (n >= 14) {
                b.kind = BoundKind::exact;
                b.value = n - 2;
            }
            return b;
        case PatternId::k113:
            b.valid_from = 9;
            if (n >= 9) {
                b.kind = BoundKind::exact;
                b.value = n - 1;
            }
            return b;
        case PatternId::s3:
            b.valid_from = 11;
            if (n >= 11) {
                b.kind = BoundKind::exact;
                b.value = n - 1;
            }
            return b;
        case PatternId::gs3:
            b.valid_from = 13;
            if (n >= 13) {
                b.kind = BoundKind::exact;
                b.value = (n - 1) / 2;
            }
            return b;
        case PatternId::k4_minus:
        case PatternId::c6:
            return b; // asymptotic-only; no finite-n value asserted
    }
    throw std::invalid_argument("unknown pattern id");
}

} // namespace hypercover
