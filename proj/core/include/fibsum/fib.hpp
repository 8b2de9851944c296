#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fibsum {

using Vertex = std::uint64_t;

/// Bad argument: a documented precondition on user input was violated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the checked 64-bit operating range of the library.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A structural claim the library is built on failed to hold at runtime.
/// what() carries the counterexample. Callers should treat this as a bug
/// report, not a usage error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Largest index kept in the Fibonacci table; fib(kFibMaxIndex) stays
/// below 2^63, so any single sum of two table values fits in uint64_t.
inline constexpr int kFibMaxIndex = 91;

/// The shared read-only table fib(0) .. fib(kFibMaxIndex).
std::span<const std::uint64_t> fib_table();

/// fib(k) for 0 <= k <= kFibMaxIndex. Throws RangeError beyond the table.
std::uint64_t fib(int k);

/// Largest vertex count n the graph-level operations accept. Chosen as
/// fib(kFibMaxIndex - 3) so that every intermediate quantity (x + n,
/// fib(bracket(n) + 3), ...) stays inside the table.
std::uint64_t max_vertex_count();

/// The unique k >= 2 with fib(k) <= x < fib(k+1).
/// Throws DomainError for x = 0 and RangeError for x >= fib(kFibMaxIndex).
int bracket(std::uint64_t x);

bool is_fibonacci(std::uint64_t x);

/// Greedy Zeckendorf decomposition of n >= 1: strictly decreasing indices
/// >= 2, no two consecutive, whose Fibonacci numbers sum to n.
std::vector<int> zeckendorf(std::uint64_t n);

/// Sum of fib(k) over the given indices, overflow-checked.
std::uint64_t fib_index_sum(std::span<const int> indices);

/// a + b, throwing RangeError on uint64 overflow.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

}  // namespace fibsum
