#include "fibsum/export.hpp"

#include <sstream>

#include <json.hpp>

namespace fibsum {

std::string to_edge_list(const FibSumGraph& g) {
  std::ostringstream out;
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

std::string to_dot(const FibSumGraph& g) {
  std::ostringstream out;
  out << "graph fibsum_" << g.size() << " {\n";
  for (Vertex v = 1; v <= g.size(); ++v) out << "  " << v << ";\n";
  for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const FibSumGraph& g) {
  nlohmann::json j;
  j["n"] = g.size();
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return j.dump();
}

std::pair<std::uint64_t, std::vector<EdgePair>> parse_graph_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::uint64_t n = j.at("n").get<std::uint64_t>();
  std::vector<EdgePair> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw DomainError("parse_graph_json: malformed edge");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return {n, std::move(edges)};
}

}  // namespace fibsum
