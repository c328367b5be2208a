#include "hypercover/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace hypercover {
namespace {

using nlohmann::json;

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int lineno = 0;

    // Returns the next non-empty line, or empty optional at end of input.
    std::optional<std::string_view> next() {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
            pos = eol == std::string_view::npos ? text.size() : eol + 1;
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.find_first_not_of(" \t") != std::string_view::npos) return line;
        }
        return std::nullopt;
    }
};

std::vector<std::int64_t> parse_ints(std::string_view line, int lineno) {
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size()) break;
        std::int64_t value = 0;
        auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{} || (p != line.data() + line.size() && *p != ' ' && *p != '\t'))
            throw ParseError("line " + std::to_string(lineno) + ": expected integers, got '" +
                             std::string(line) + "'");
        out.push_back(value);
        i = static_cast<std::size_t>(p - line.data());
    }
    return out;
}

std::int64_t parse_single_int(LineReader& r, const char* what) {
    auto line = r.next();
    if (!line) throw ParseError(std::string("missing ") + what);
    auto vals = parse_ints(*line, r.lineno);
    if (vals.size() != 1)
        throw ParseError("line " + std::to_string(r.lineno) + ": expected a single integer (" + what + ")");
    return vals[0];
}

template <int K>
std::vector<std::array<int, K>> parse_edge_lines(LineReader& r, std::int64_t n, std::int64_t m) {
    if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range: " + std::to_string(n));
    if (m < 0) throw ParseError("negative edge count");
    std::vector<std::array<int, K>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        auto line = r.next();
        if (!line) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        auto vals = parse_ints(*line, r.lineno);
        if (vals.size() != K)
            throw ParseError("line " + std::to_string(r.lineno) + ": expected " + std::to_string(K) +
                             " vertices per edge");
        std::array<int, K> e{};
        for (int j = 0; j < K; ++j) {
            if (vals[j] < 0 || vals[j] >= n)
                throw ParseError("line " + std::to_string(r.lineno) + ": vertex out of range");
            e[j] = static_cast<int>(vals[j]);
        }
        for (int j = 0; j + 1 < K; ++j)
            if (e[j] >= e[j + 1])
                throw ParseError("line " + std::to_string(r.lineno) + ": edge vertices must be strictly increasing");
        edges.push_back(e);
    }
    if (r.next()) throw ParseError("trailing content after edge list");
    return edges;
}

// Constructor validation (duplicates etc.) rethrown as ParseError.
template <typename G, typename E>
G build(std::int64_t n, std::vector<E> edges) {
    try {
        return G(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json edges_to_json(const std::vector<Triple>& edges) {
    json a = json::array();
    for (const auto& [x, y, z] : edges) a.push_back({x, y, z});
    return a;
}

json edges_to_json(const std::vector<Pair>& edges) {
    json a = json::array();
    for (const auto& [x, y] : edges) a.push_back({x, y});
    return a;
}

template <int K>
std::pair<std::int64_t, std::vector<std::array<int, K>>> edges_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() ||
        !j["edges"].is_array())
        throw ParseError("expected {\"n\": int, \"edges\": [...]}");
    std::int64_t n = j["n"].get<std::int64_t>();
    if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range: " + std::to_string(n));
    std::vector<std::array<int, K>> edges;
    for (const auto& je : j["edges"]) {
        if (!je.is_array() || je.size() != K) throw ParseError("each edge must be an array of " + std::to_string(K));
        std::array<int, K> e{};
        for (int i = 0; i < K; ++i) {
            if (!je[i].is_number_integer()) throw ParseError("edge vertices must be integers");
            std::int64_t v = je[i].get<std::int64_t>();
            if (v < 0 || v >= n) throw ParseError("vertex out of range");
            e[i] = static_cast<int>(v);
        }
        for (int i = 0; i + 1 < K; ++i)
            if (e[i] >= e[i + 1]) throw ParseError("edge vertices must be strictly increasing");
        edges.push_back(e);
    }
    return {n, std::move(edges)};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

bool is_json_path(const std::filesystem::path& path) { return path.extension() == ".json"; }

} // namespace

ThreeGraph parse_three_graph(std::string_view text) {
    LineReader r{text};
    std::int64_t n = parse_single_int(r, "vertex count");
    std::int64_t m = parse_single_int(r, "edge count");
    return build<ThreeGraph>(n, parse_edge_lines<3>(r, n, m));
}

std::string serialize_three_graph(const ThreeGraph& h) {
    std::string out = std::to_string(h.vertex_count()) + "\n" + std::to_string(h.edge_count()) + "\n";
    for (const auto& [a, b, c] : h.edges())
        out += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + "\n";
    return out;
}

Graph2 parse_graph2(std::string_view text) {
    LineReader r{text};
    std::int64_t n = parse_single_int(r, "vertex count");
    std::int64_t m = parse_single_int(r, "edge count");
    return build<Graph2>(n, parse_edge_lines<2>(r, n, m));
}

std::string serialize_graph2(const Graph2& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n" + std::to_string(g.edge_count()) + "\n";
    for (const auto& [a, b] : g.edges()) out += std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

ThreeGraph parse_three_graph_json(std::string_view text) {
    auto [n, edges] = edges_from_json<3>(text);
    return build<ThreeGraph>(n, std::move(edges));
}

std::string serialize_three_graph_json(const ThreeGraph& h) {
    json j{{"n", h.vertex_count()}, {"edges", edges_to_json(h.edges())}};
    return j.dump();
}

Graph2 parse_graph2_json(std::string_view text) {
    auto [n, edges] = edges_from_json<2>(text);
    return build<Graph2>(n, std::move(edges));
}

std::string serialize_graph2_json(const Graph2& g) {
    json j{{"n", g.vertex_count()}, {"edges", edges_to_json(g.edges())}};
    return j.dump();
}

ThreeGraph load_three_graph(const std::filesystem::path& path) {
    std::string text = read_file(path);
    return is_json_path(path) ? parse_three_graph_json(text) : parse_three_graph(text);
}

void save_three_graph(const ThreeGraph& h, const std::filesystem::path& path) {
    write_file(path, is_json_path(path) ? serialize_three_graph_json(h) : serialize_three_graph(h));
}

Graph2 load_graph2(const std::filesystem::path& path) {
    std::string text = read_file(path);
    return is_json_path(path) ? parse_graph2_json(text) : parse_graph2(text);
}

void save_graph2(const Graph2& g, const std::filesystem::path& path) {
    write_file(path, is_json_path(path) ? serialize_graph2_json(g) : serialize_graph2(g));
}

} // namespace hypercover
