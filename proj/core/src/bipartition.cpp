#include "fibsum/bipartition.hpp"

#include <string>

namespace fibsum {

namespace {

void check_range(std::uint64_t x, const char* who) {
  if (x == 0) throw DomainError(std::string(who) + ": argument must be >= 1");
  if (x > max_vertex_count()) throw RangeError(std::string(who) + ": argument beyond checked range");
}

// 2 * S(fib(k)), by residue of k mod 6.
std::int64_t s2_at_fib(int k) {
  switch (k % 6) {
    case 0:
    case 3:
      return 0;
    case 2:
    case 4:
      return 1;
    default:  // 1, 5
      return -1;
  }
}

// Prefix recursion S(N) = S(fib(k)) + S(N - fib(k)), with a correction when
// the colour reduction's exceptional vertex fib(k+2)/2 lies inside the
// prefix: its colour is pinned by k mod 6 instead of copied from the shifted
// position fib(k-1)/2, which contributes +-1 to the colour sum (so +-2 here).
std::int64_t s2(std::uint64_t n) {
  std::int64_t acc = 0;
  while (n > 0) {
    const int k = bracket(n);
    if (n == fib(k)) return acc + s2_at_fib(k);
    if (k % 3 == 1 && 2 * n >= fib(k + 2)) acc += k % 6 == 1 ? 2 : -2;
    acc += s2_at_fib(k);
    n -= fib(k);
  }
  return acc;
}

}  // namespace

int colour_of(std::uint64_t x) {
  check_range(x, "colour_of");
  // Strip leading Zeckendorf terms until a Fibonacci number or the
  // half-Fibonacci exception is reached.
  while (true) {
    const int k = bracket(x);
    if (x == fib(k)) return k % 2 == 0 ? 1 : 0;
    if (2 * x == fib(k + 2)) return k % 6 == 1 ? 1 : 0;  // k = 1 or 4 (mod 6) here
    x -= fib(k);
  }
}

ImbalancePrefix s_of(std::uint64_t n) {
  if (n == 0) return {0, 0};
  if (n > max_vertex_count()) throw RangeError("s_of: argument beyond checked range");
  return {n, s2(n)};
}

PartSizes part_sizes(std::uint64_t n) {
  check_range(n, "part_sizes");
  const std::int64_t twice = s2(n);
  // size1 = n/2 + S(n), exactly; 2*size1 = n + 2*S(n).
  const std::uint64_t size1 =
      twice >= 0 ? (n + static_cast<std::uint64_t>(twice)) / 2
                 : (n - static_cast<std::uint64_t>(-twice)) / 2;
  return {size1, n - size1};
}

PartSizes part_sizes_scan(std::uint64_t n) {
  check_range(n, "part_sizes_scan");
  std::uint64_t size1 = 0;
  for (std::uint64_t i = 1; i <= n; ++i) size1 += static_cast<std::uint64_t>(colour_of(i));
  return {size1, n - size1};
}

std::uint64_t imbalance_witness(std::uint64_t z) {
  if (z == 0) throw DomainError("imbalance_witness: z must be >= 1");
  if (12 * z + 1 > static_cast<std::uint64_t>(kFibMaxIndex))
    throw RangeError("imbalance_witness: fib(12z+1) beyond checked range");
  std::uint64_t n = 0;
  for (std::uint64_t i = 1; i <= 2 * z; ++i) n = checked_add(n, fib(static_cast<int>(6 * i + 1)));
  if (n > max_vertex_count()) throw RangeError("imbalance_witness: witness exceeds supported vertex count");
  return n;
}

std::vector<std::uint8_t> colours(std::uint64_t n) {
  check_range(n, "colours");
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t i = 1; i <= n; ++i) out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(colour_of(i));
  return out;
}

}  // namespace fibsum
