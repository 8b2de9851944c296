#include "fibsum/fib.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace fibsum {

namespace {

std::array<std::uint64_t, kFibMaxIndex + 1> build_table() {
  std::array<std::uint64_t, kFibMaxIndex + 1> t{};
  t[0] = 0;
  t[1] = 1;
  for (int k = 2; k <= kFibMaxIndex; ++k) t[k] = checked_add(t[k - 1], t[k - 2]);
  return t;
}

const std::array<std::uint64_t, kFibMaxIndex + 1>& table() {
  static const auto t = build_table();
  return t;
}

}  // namespace

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s < a) throw RangeError("checked_add: uint64 overflow");
  return s;
}

std::span<const std::uint64_t> fib_table() { return {table().data(), table().size()}; }

std::uint64_t fib(int k) {
  if (k < 0) throw DomainError("fib: negative index");
  if (k > kFibMaxIndex) throw RangeError("fib: index " + std::to_string(k) + " beyond checked 64-bit table (max " + std::to_string(kFibMaxIndex) + ")");
  return table()[static_cast<std::size_t>(k)];
}

std::uint64_t max_vertex_count() { return table()[kFibMaxIndex - 3]; }

int bracket(std::uint64_t x) {
  if (x == 0) throw DomainError("bracket: x must be >= 1");
  const auto& t = table();
  if (x >= t[kFibMaxIndex]) throw RangeError("bracket: x beyond checked range");
  // t is strictly increasing from index 2 onward; search that suffix.
  auto it = std::upper_bound(t.begin() + 2, t.end(), x);
  return static_cast<int>(it - t.begin()) - 1;
}

bool is_fibonacci(std::uint64_t x) {
  const auto& t = table();
  if (x > t[kFibMaxIndex]) throw RangeError("is_fibonacci: x beyond checked range");
  return std::binary_search(t.begin() + 2, t.end(), x) || x <= 1;
}

std::vector<int> zeckendorf(std::uint64_t n) {
  if (n == 0) throw DomainError("zeckendorf: n must be >= 1");
  std::vector<int> indices;
  while (n > 0) {
    int k = bracket(n);
    indices.push_back(k);
    n -= fib(k);
  }
  return indices;
}

std::uint64_t fib_index_sum(std::span<const int> indices) {
  std::uint64_t s = 0;
  for (int k : indices) s = checked_add(s, fib(k));
  return s;
}

}  // namespace fibsum
