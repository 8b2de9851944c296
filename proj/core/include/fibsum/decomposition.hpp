#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fibsum/graph.hpp"

namespace fibsum {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;            // each of size <= 3
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  std::size_t width() const;
};

struct OuterplanarCertificate {
  std::vector<Vertex> order;  // circular, canonicalized to start at vertex 1
};

struct ValidationResult {
  bool ok = true;
  std::string detail;  // first violated condition, when !ok

  explicit operator bool() const { return ok; }
};

/// Width-2 tree decomposition built vertex by vertex. A new degree-1 vertex
/// contributes the bag {m, neighbor}; a new degree-2 vertex m with neighbors
/// u < w and helper x = m - fib(k) contributes the two triangle bags
/// {m, u, x} and {m, w, x}, the second of which takes over the pendant bag
/// {w, x} (still a leaf at that point). Trees (n <= 6) come out at width 1.
TreeDecomposition build_tree_decomposition(std::uint64_t n);

/// Checks vertex coverage, edge coverage, the running-intersection property
/// and that tree_edges form a tree. Names the first violated condition.
ValidationResult validate_tree_decomposition(const FibSumGraph& g, const TreeDecomposition& td);

/// Circular vertex order with no two interleaving edges, built by inserting
/// each vertex next to its attachment edge; the placement is checked on the
/// fly and falls back to a full gap search if the preferred spot fails.
OuterplanarCertificate build_outerplanar_certificate(std::uint64_t n);

/// True iff order is a permutation of 1..n (else DomainError) and no two
/// edges of g interleave around it. Stack-based laminar check, O(m log m).
ValidationResult validate_outerplanar_certificate(const FibSumGraph& g, const OuterplanarCertificate& cert);

/// Quadratic pairwise interleaving scan over an arbitrary edge list; the
/// cross-check twin of the stack validator, also usable on non-Fibonacci
/// edge sets (test controls).
ValidationResult validate_circular_order_bruteforce(std::uint64_t n, const std::vector<Vertex>& order,
                                                    const std::vector<EdgePair>& edges);

}  // namespace fibsum
