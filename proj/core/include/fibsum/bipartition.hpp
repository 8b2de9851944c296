#pragma once

#include <cstdint>
#include <vector>

#include "fibsum/fib.hpp"

namespace fibsum {

/// The canonical proper 2-colouring of the Fibonacci-sum graph, fixed by
/// colour(1) = 1. The colour of a vertex does not depend on the ambient
/// vertex count, so this is a function of the vertex alone.
int colour_of(std::uint64_t x);

struct PartSizes {
  std::uint64_t size1 = 0;  // vertices with colour 1
  std::uint64_t size0 = 0;

  friend bool operator==(const PartSizes&, const PartSizes&) = default;
};

/// Exact half-integer prefix imbalance S(N) = sum of colours over 1..N minus
/// N/2, stored doubled so no fractions ever appear.
struct ImbalancePrefix {
  std::uint64_t n = 0;
  std::int64_t twice = 0;  // 2 * S(n)

  friend bool operator==(const ImbalancePrefix&, const ImbalancePrefix&) = default;
};

/// S(N) via the Fibonacci-prefix recursion S(N) = S(fib(k)) + S(N - fib(k)),
/// with an exact +-1 correction when k = 1, 4 (mod 6) and the prefix covers
/// the pinned-colour vertex fib(k+2)/2. O(log^2 N).
ImbalancePrefix s_of(std::uint64_t n);

/// Part sizes of the canonical bipartition: size1 = N/2 + S(N).
PartSizes part_sizes(std::uint64_t n);

/// Part sizes by direct colour summation; the oracle twin of part_sizes.
PartSizes part_sizes_scan(std::uint64_t n);

/// Vertex count whose bipartition misses n/2 by exactly z:
/// the sum of fib(6i + 1) for i = 1..2z.
std::uint64_t imbalance_witness(std::uint64_t z);

/// Colours of 1..n in one pass (for CSV export and scans).
std::vector<std::uint8_t> colours(std::uint64_t n);

}  // namespace fibsum
