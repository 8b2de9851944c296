#pragma once

#include <cstdint>
#include <vector>

#include "fibsum/fib.hpp"

namespace fibsum {

enum class HamiltonStatus { kNone, kUnique, kTwo };

enum class HamiltonReason { kNone, kIsNine, kIsEleven, kFibonacci, kFibonacciMinusOne };

struct HamiltonClassification {
  std::uint64_t n = 0;
  HamiltonStatus status = HamiltonStatus::kNone;
  HamiltonReason reason = HamiltonReason::kNone;

  friend bool operator==(const HamiltonClassification&, const HamiltonClassification&) = default;
};

/// An ordering of 1..n whose consecutive entries sum to Fibonacci numbers.
using HamiltonPath = std::vector<Vertex>;

/// Whether a sequence is a Hamiltonian path of the n-vertex graph.
bool is_hamilton_path(std::uint64_t n, const HamiltonPath& path);

/// Which vertex counts admit Hamiltonian paths, and how many: none unless
/// n is 9, 11, a Fibonacci number, or one less than one; two paths exactly
/// for the Fibonacci / Fibonacci-minus-one families at index 1 (mod 3).
/// Below 9 the enumerator decides (the family rule misfires on tiny n).
HamiltonClassification classify(std::uint64_t n);

/// Exhaustive search cap for enumerate_paths_bruteforce.
inline constexpr std::uint64_t kHamiltonEnumerationCap = 40;

/// All Hamiltonian paths of the n-vertex graph (up to reversal), each stored
/// in the direction with the smaller endpoint first, sorted. Exponential
/// backtracking with pendant and availability pruning; n above the cap is a
/// RangeError.
std::vector<HamiltonPath> enumerate_paths_bruteforce(std::uint64_t n);

/// Constructive path(s) for Fibonacci n = fib(k), k >= 5: restricted-sum
/// greedy walk from the known far endpoint, where each step has a unique
/// continuation among sums in {fib(k-1), fib(k), fib(k+1)}. For k = 1 (mod 3)
/// the second path differs from the first in the three vertices at the far
/// end. Results are fully re-validated; a failed step or validation throws
/// InvariantViolation.
std::vector<HamiltonPath> build_path(std::uint64_t n);

/// Paths for any qualifying n (empty when none exist): brute force up to the
/// enumeration cap, the greedy construction for larger Fibonacci n, and the
/// greedy construction with the top endpoint removed for n one below a
/// Fibonacci number. Everything returned is validated.
std::vector<HamiltonPath> hamilton_paths(std::uint64_t n);

}  // namespace fibsum
