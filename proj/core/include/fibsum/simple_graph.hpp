#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fibsum/graph.hpp"

namespace fibsum {

/// Plain adjacency-list graph on vertices 1..n. Used by the brute-force
/// oracles and by test controls that need non-Fibonacci edge sets.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::uint64_t n) : adj_(static_cast<std::size_t>(n) + 1) {}

  static SimpleGraph from_edges(std::uint64_t n, const std::vector<EdgePair>& edges) {
    SimpleGraph g(n);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
  }

  static SimpleGraph from_fib(const FibSumGraph& g) {
    return from_edges(g.size(), g.edges());
  }

  std::uint64_t size() const { return adj_.empty() ? 0 : adj_.size() - 1; }

  void add_edge(Vertex a, Vertex b) {
    if (a == b || a == 0 || b == 0 || a > size() || b > size())
      throw DomainError("SimpleGraph::add_edge: bad endpoints");
    insert_sorted(adj_[static_cast<std::size_t>(a)], b);
    insert_sorted(adj_[static_cast<std::size_t>(b)], a);
  }

  bool adjacent(Vertex a, Vertex b) const {
    if (a == 0 || b == 0 || a > size() || b > size()) return false;
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }

  const std::vector<Vertex>& neighbors(Vertex x) const {
    return adj_[static_cast<std::size_t>(x)];
  }

  std::uint64_t degree(Vertex x) const { return adj_[static_cast<std::size_t>(x)].size(); }

  std::uint64_t edge_count() const {
    std::uint64_t twice = 0;
    for (std::size_t v = 1; v < adj_.size(); ++v) twice += adj_[v].size();
    return twice / 2;
  }

 private:
  static void insert_sorted(std::vector<Vertex>& row, Vertex v) {
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v) row.insert(it, v);
  }

  std::vector<std::vector<Vertex>> adj_;
};

}  // namespace fibsum
