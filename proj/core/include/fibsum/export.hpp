#pragma once

#include <string>

#include "fibsum/graph.hpp"

namespace fibsum {

/// One edge per line, "i j" with i < j, ascending lexicographic.
std::string to_edge_list(const FibSumGraph& g);

/// Undirected DOT, vertices labeled by integer.
std::string to_dot(const FibSumGraph& g);

/// {"n": <int>, "edges": [[i, j], ...]} in the edge-list order.
std::string to_json(const FibSumGraph& g);

/// Parse the JSON emitted by to_json back into (n, edges).
std::pair<std::uint64_t, std::vector<EdgePair>> parse_graph_json(const std::string& text);

}  // namespace fibsum
