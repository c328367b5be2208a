#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypercover/hypergraph.hpp"

namespace hypercover {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format (".h3"): line 1 = n, line 2 = m, then m lines "a b c" with
// 0 <= a < b < c < n. The 2-graph format (".g2") is identical with pairs.
// Serializers emit edges in colex order.
ThreeGraph parse_three_graph(std::string_view text);
std::string serialize_three_graph(const ThreeGraph& h);

Graph2 parse_graph2(std::string_view text);
std::string serialize_graph2(const Graph2& g);

// JSON format: {"n": int, "edges": [[a,b,c], ...]} (pairs for 2-graphs).
ThreeGraph parse_three_graph_json(std::string_view text);
std::string serialize_three_graph_json(const ThreeGraph& h);

Graph2 parse_graph2_json(std::string_view text);
std::string serialize_graph2_json(const Graph2& g);

// File helpers dispatch on extension: ".json" selects the JSON format,
// anything else the text format.
ThreeGraph load_three_graph(const std::filesystem::path& path);
void save_three_graph(const ThreeGraph& h, const std::filesystem::path& path);

Graph2 load_graph2(const std::filesystem::path& path);
void save_graph2(const Graph2& g, const std::filesystem::path& path);

} // namespace hypercover
