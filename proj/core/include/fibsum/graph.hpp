#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "fibsum/fib.hpp"

namespace fibsum {

using EdgePair = std::pair<Vertex, Vertex>;  // always stored with first < second

/// The graph on vertices 1..n where {i, j} is an edge iff i + j is a
/// Fibonacci number. Adjacency is answered by the closed form; the
/// explicit edge list is materialized on demand and cached.
class FibSumGraph {
 public:
  explicit FibSumGraph(std::uint64_t n);
  FibSumGraph(const FibSumGraph& other);
  FibSumGraph& operator=(const FibSumGraph& other);
  FibSumGraph(FibSumGraph&&) noexcept = default;
  FibSumGraph& operator=(FibSumGraph&&) noexcept = default;

  std::uint64_t size() const { return n_; }

  /// True iff {a, b} is an edge: a != b, both in [1, n], a + b Fibonacci.
  bool adjacent(Vertex a, Vertex b) const;

  /// Sorted neighbors of x, O(log n + output).
  std::vector<Vertex> neighbors(Vertex x) const;

  /// Explicit edge list, ascending lexicographic with i < j per pair.
  /// Computed once per instance (thread-safe); identical to the implicit
  /// oracle's output pair-for-pair.
  const std::vector<EdgePair>& edges() const;

  bool edges_materialized() const;

 private:
  struct EdgeCache {
    std::once_flag once;
    std::vector<EdgePair> edges;
    bool ready = false;
  };

  std::uint64_t n_;
  mutable std::unique_ptr<EdgeCache> cache_;
};

struct DegreeReport {
  Vertex x = 0;
  std::uint64_t degree = 0;
  int k = 0;    // bracket(x)
  int ell = 0;  // bracket(x + n)

  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

std::vector<Vertex> neighbors(const FibSumGraph& g, Vertex x);

/// Degree of x in the n-vertex graph without touching adjacency:
/// ell - k, minus one when x = 1 or (k >= 4 and 2x = fib(k+2)).
DegreeReport degree_closed_form(std::uint64_t n, Vertex x);

/// Closed-form |E|, two branches split at 2n <=> fib(bracket(n)+2).
std::uint64_t edge_count_closed_form(std::uint64_t n);

/// Sorted degree-1 vertices, computed by a closed-form-degree scan over the
/// candidate window and cross-checked against the interval rule (n >= 4).
/// Disagreement throws InvariantViolation naming the first differing vertex.
std::vector<Vertex> pendants(std::uint64_t n);

/// The interval rule alone: the run fib(k)..min(n, fib(k+2)-n-1) plus the
/// at-most-one half-Fibonacci extra. Exposed for cross-validation.
std::vector<Vertex> pendants_interval_rule(std::uint64_t n);

/// Smallest-known n with exactly p pendants: fib(6p+1) + p - 1.
std::uint64_t pendant_witness(std::uint64_t p);

/// Breadth-first reachability of all vertices from vertex 1.
bool is_connected(const FibSumGraph& g);

}  // namespace fibsum
