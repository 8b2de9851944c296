#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fibsum/fib.hpp"

namespace fibsum {

/// The automorphism group of a Fibonacci-sum graph: trivial, or generated by
/// a single involution given as its list of swapped pairs. The group order is
/// at most 2 from n = 9 on; the pair count is at most 2 from n = 34 on (the
/// 11-vertex graph, for instance, swaps five pairs).
struct AutomorphismGroup {
  std::uint64_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> swaps;  // empty means identity only

  int order() const { return swaps.empty() ? 1 : 2; }

  friend bool operator==(const AutomorphismGroup&, const AutomorphismGroup&) = default;
};

/// Closed-form group for N >= 9. Locates the window fib(t) <= N < fib(t+3)
/// with t = 0 (mod 3) and classifies N into one of five half-open intervals:
/// three give the identity; [3fib(t)/2, fib(t+3)/2) swaps fib(t)/2 with
/// 3fib(t)/2; [fib(t+2)+fib(t-3)/2, fib(t+3)-fib(t)/2) additionally swaps
/// fib(t+2)+fib(t-3)/2 with fib(t+3)/2. Below N = 34 (where the window
/// would start under t = 9) the brute-force oracle answers instead.
AutomorphismGroup aut_closed_form(std::uint64_t n);

/// Search cap for aut_bruteforce.
inline constexpr std::uint64_t kAutBruteforceCap = 400;

/// Exact group by degree-refined backtracking over the explicit graph.
/// Throws InvariantViolation if the found group is not generated by a single
/// involution (which would contradict the closed-form classification).
AutomorphismGroup aut_bruteforce(std::uint64_t n);

struct IntervalRow {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  int order = 1;

  friend bool operator==(const IntervalRow&, const IntervalRow&) = default;
};

/// Maximal runs of consecutive N in [7, max_n] with the same group order.
std::vector<IntervalRow> interval_report(std::uint64_t max_n);

/// Check that the involution maps edges to edges, testing every edge
/// incident to a swapped vertex against the implicit adjacency oracle.
bool involution_preserves_edges(std::uint64_t n, const std::vector<std::pair<Vertex, Vertex>>& swaps);

}  // namespace fibsum
