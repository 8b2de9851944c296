#include "fibsum/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace fibsum {

namespace {

constexpr std::uint64_t kExplicitCap = 1ull << 27;  // materialization / BFS guard
constexpr std::uint64_t kPendantScanCap = 1ull << 21;

void check_n(std::uint64_t n) {
  if (n == 0) throw DomainError("vertex count must be >= 1");
  if (n > max_vertex_count())
    throw RangeError("vertex count " + std::to_string(n) + " beyond checked 64-bit range (max " +
                     std::to_string(max_vertex_count()) + ")");
}

void check_vertex(std::uint64_t n, Vertex x) {
  if (x == 0 || x > n)
    throw DomainError("vertex " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
}

std::vector<Vertex> neighbors_impl(std::uint64_t n, Vertex x) {
  // Candidate partners are fib(i) - x for bracket(x) < i <= bracket(x + n);
  // any other index makes the sum miss the Fibonacci window entirely.
  const int lo = bracket(x);
  const int hi = bracket(x + n);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  for (int i = lo + 1; i <= hi; ++i) {
    const std::uint64_t f = fib(i);
    if (f <= x) continue;
    const Vertex y = f - x;
    if (y >= 1 && y <= n && y != x) out.push_back(y);
  }
  return out;
}

}  // namespace

FibSumGraph::FibSumGraph(std::uint64_t n) : n_(n), cache_(std::make_unique<EdgeCache>()) {
  check_n(n);
}

FibSumGraph::FibSumGraph(const FibSumGraph& other)
    : n_(other.n_), cache_(std::make_unique<EdgeCache>()) {}

FibSumGraph& FibSumGraph::operator=(const FibSumGraph& other) {
  if (this != &other) {
    n_ = other.n_;
    cache_ = std::make_unique<EdgeCache>();
  }
  return *this;
}

bool FibSumGraph::adjacent(Vertex a, Vertex b) const {
  check_vertex(n_, a);
  check_vertex(n_, b);
  return a != b && is_fibonacci(a + b);
}

std::vector<Vertex> FibSumGraph::neighbors(Vertex x) const {
  check_vertex(n_, x);
  return neighbors_impl(n_, x);
}

const std::vector<EdgePair>& FibSumGraph::edges() const {
  std::call_once(cache_->once, [this] {
    if (n_ > kExplicitCap)
      throw RangeError("explicit edge list only supported up to n = " + std::to_string(kExplicitCap));
    std::vector<EdgePair> es;
    es.reserve(static_cast<std::size_t>(2 * n_));
    for (Vertex x = 1; x <= n_; ++x)
      for (Vertex y : neighbors_impl(n_, x))
        if (x < y) es.emplace_back(x, y);
    cache_->edges = std::move(es);
    cache_->ready = true;
  });
  if (!cache_->ready) throw RangeError("edge materialization failed earlier");
  return cache_->edges;
}

bool FibSumGraph::edges_materialized() const { return cache_->ready; }

std::vector<Vertex> neighbors(const FibSumGraph& g, Vertex x) { return g.neighbors(x); }

DegreeReport degree_closed_form(std::uint64_t n, Vertex x) {
  check_n(n);
  check_vertex(n, x);
  const int k = bracket(x);
  const int ell = bracket(x + n);
  std::uint64_t degree = static_cast<std::uint64_t>(ell - k);
  if (x == 1 || (k >= 4 && 2 * x == fib(k + 2))) degree -= 1;
  return DegreeReport{x, degree, k, ell};
}

std::uint64_t edge_count_closed_form(std::uint64_t n) {
  check_n(n);
  const int k = bracket(n);
  const std::uint64_t fk = fib(k), fk2 = fib(k + 2);
  // Doubled form of the two-branch count; halved at the end.
  std::uint64_t twice = 2 * n + fk + 1 - static_cast<std::uint64_t>(4 * (k + 1) / 3);
  if (2 * n > fk2) twice += 2 * n - 2 * (fk2 / 2);
  if (twice % 2 != 0)
    throw InvariantViolation("edge_count_closed_form: non-integral count at n = " + std::to_string(n));
  return twice / 2;
}

std::vector<Vertex> pendants_interval_rule(std::uint64_t n) {
  check_n(n);
  if (n == 1) return {};
  const int k = bracket(n);
  const std::uint64_t fk = fib(k), fk1 = fib(k + 1), fk2 = fib(k + 2);
  std::vector<Vertex> out;
  const std::uint64_t run_hi = (2 * n < fk2) ? n : fk2 - n - 1;
  for (std::uint64_t v = fk; v <= run_hi; ++v) out.push_back(v);
  // At most one extra pendant, a half-Fibonacci vertex; which one depends on
  // k mod 3 (that residue decides which nearby Fibonacci number is even).
  switch (k % 3) {
    case 0:
      if (2 * n < 2 * fk1 - fk) out.push_back(fk / 2);
      break;
    case 2:
      out.push_back(fk1 / 2);
      break;
    case 1:
      if (2 * n >= fk2) out.push_back(fk2 / 2);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> pendants(std::uint64_t n) {
  check_n(n);
  const std::vector<Vertex> rule = pendants_interval_rule(n);
  if (n <= kPendantScanCap) {
    std::vector<Vertex> scan;
    for (Vertex x = 1; x <= n; ++x)
      if (degree_closed_form(n, x).degree == 1) scan.push_back(x);
    if (n >= 4 && scan != rule) {
      std::string msg = "pendants: interval rule disagrees with degree scan at n = " + std::to_string(n);
      for (Vertex v : scan)
        if (!std::binary_search(rule.begin(), rule.end(), v)) {
          msg += "; scan has " + std::to_string(v);
          break;
        }
      for (Vertex v : rule)
        if (!std::binary_search(scan.begin(), scan.end(), v)) {
          msg += "; rule has " + std::to_string(v);
          break;
        }
      throw InvariantViolation(msg);
    }
    return scan;
  }
  // Beyond scan range: return the rule, but verify each claimed pendant.
  for (Vertex v : rule)
    if (degree_closed_form(n, v).degree != 1)
      throw InvariantViolation("pendants: rule vertex " + std::to_string(v) + " has degree != 1 at n = " +
                               std::to_string(n));
  return rule;
}

std::uint64_t pendant_witness(std::uint64_t p) {
  if (p == 0) throw DomainError("pendant_witness: p must be >= 1");
  if (6 * p + 1 > static_cast<std::uint64_t>(kFibMaxIndex))
    throw RangeError("pendant_witness: fib(6p+1) beyond checked range");
  const std::uint64_t n = checked_add(fib(static_cast<int>(6 * p + 1)), p - 1);
  if (n > max_vertex_count()) throw RangeError("pendant_witness: witness exceeds supported vertex count");
  return n;
}

bool is_connected(const FibSumGraph& g) {
  const std::uint64_t n = g.size();
  if (n == 1) return true;
  if (n > kExplicitCap) throw RangeError("is_connected: breadth-first search capped at n = " + std::to_string(kExplicitCap));
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::deque<Vertex> queue{1};
  seen[1] = true;
  std::uint64_t reached = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace fibsum
