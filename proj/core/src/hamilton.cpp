#include "fibsum/hamilton.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fibsum/graph.hpp"
#include "fibsum/simple_graph.hpp"

namespace fibsum {

namespace {

HamiltonPath canonical(HamiltonPath p) {
  HamiltonPath r(p.rbegin(), p.rend());
  return r < p ? r : p;
}

struct Enumerator {
  std::uint64_t n;
  SimpleGraph g;
  std::set<HamiltonPath> found;
  std::vector<Vertex> path;
  std::vector<bool> visited;
  std::vector<int> avail;  // unvisited-neighbor counts

  explicit Enumerator(std::uint64_t n_) : n(n_), g(SimpleGraph::from_fib(FibSumGraph(n_))) {
    visited.assign(n + 1, false);
    avail.assign(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) avail[v] = static_cast<int>(g.degree(v));
  }

  bool dead_end(Vertex head) {
    // Every unvisited vertex still needs two live connections unless it can
    // be the final endpoint, and at most one vertex may claim that role.
    int must_end = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (visited[v]) continue;
      const int conn = avail[v] + (g.adjacent(head, v) ? 1 : 0);
      if (conn == 0) return true;
      if (conn == 1 && ++must_end > 1) return true;
    }
    return false;
  }

  void dfs(Vertex head) {
    if (path.size() == n) {
      found.insert(canonical(path));
      return;
    }
    if (dead_end(head)) return;
    for (Vertex w : g.neighbors(head)) {
      if (visited[w]) continue;
      visited[w] = true;
      path.push_back(w);
      for (Vertex u : g.neighbors(w)) --avail[u];
      dfs(w);
      for (Vertex u : g.neighbors(w)) ++avail[u];
      path.pop_back();
      visited[w] = false;
    }
  }

  std::vector<HamiltonPath> run() {
    // Degree-1 vertices must be endpoints; three of them kill every path.
    std::vector<Vertex> pendant_list;
    for (Vertex v = 1; v <= n; ++v)
      if (g.degree(v) == 1) pendant_list.push_back(v);
    if (pendant_list.size() > 2) return {};
    std::vector<Vertex> starts;
    if (!pendant_list.empty())
      starts = {pendant_list.front()};
    else
      for (Vertex v = 1; v <= n; ++v) starts.push_back(v);
    for (Vertex s : starts) {
      visited[s] = true;
      path = {s};
      for (Vertex u : g.neighbors(s)) --avail[u];
      dfs(s);
      for (Vertex u : g.neighbors(s)) ++avail[u];
      visited[s] = false;
    }
    return {found.begin(), found.end()};
  }
};

void validate_or_throw(std::uint64_t n, const HamiltonPath& p, const char* origin) {
  if (!is_hamilton_path(n, p))
    throw InvariantViolation(std::string(origin) + ": constructed sequence is not a Hamiltonian path of G_" +
                             std::to_string(n));
}

}  // namespace

bool is_hamilton_path(std::uint64_t n, const HamiltonPath& path) {
  if (path.size() != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (Vertex v : path) {
    if (v == 0 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!is_fibonacci(path[i] + path[i + 1])) return false;
  return true;
}

HamiltonClassification classify(std::uint64_t n) {
  if (n == 0) throw DomainError("classify: n must be >= 1");
  HamiltonReason reason = HamiltonReason::kNone;
  HamiltonStatus status = HamiltonStatus::kNone;
  if (n == 9) {
    reason = HamiltonReason::kIsNine;
    status = HamiltonStatus::kUnique;
  } else if (n == 11) {
    reason = HamiltonReason::kIsEleven;
    status = HamiltonStatus::kUnique;
  } else if (is_fibonacci(n)) {
    reason = HamiltonReason::kFibonacci;
    status = bracket(n) % 3 == 1 ? HamiltonStatus::kTwo : HamiltonStatus::kUnique;
  } else if (is_fibonacci(n + 1)) {
    reason = HamiltonReason::kFibonacciMinusOne;
    status = bracket(n + 1) % 3 == 1 ? HamiltonStatus::kTwo : HamiltonStatus::kUnique;
  }
  if (n < 9) {
    // The family rule is stated for the large regime; resolve tiny graphs
    // by exhaustive count (e.g. n = 2 is both fib(3) and fib(4) - 1).
    const auto count = enumerate_paths_bruteforce(n).size();
    status = count == 0 ? HamiltonStatus::kNone
                        : (count == 1 ? HamiltonStatus::kUnique : HamiltonStatus::kTwo);
    if (status == HamiltonStatus::kNone) reason = HamiltonReason::kNone;
  }
  return {n, status, reason};
}

std::vector<HamiltonPath> enumerate_paths_bruteforce(std::uint64_t n) {
  if (n == 0) throw DomainError("enumerate_paths_bruteforce: n must be >= 1");
  if (n > kHamiltonEnumerationCap)
    throw RangeError("enumerate_paths_bruteforce: n > " + std::to_string(kHamiltonEnumerationCap));
  if (n == 1) return {HamiltonPath{1}};
  return Enumerator(n).run();
}

std::vector<HamiltonPath> build_path(std::uint64_t n) {
  if (n == 0) throw DomainError("build_path: n must be >= 1");
  if (!is_fibonacci(n) || n < 5) throw DomainError("build_path: n must be fib(k) with k >= 5");
  const int k = bracket(n);

  const std::uint64_t sums[3] = {fib(k - 1), fib(k), fib(k + 1)};
  auto greedy = [&](Vertex start) {
    HamiltonPath path{start};
    std::vector<bool> visited(n + 1, false);
    visited[start] = true;
    while (path.size() < n) {
      const Vertex head = path.back();
      Vertex next = 0;
      int candidates = 0;
      for (std::uint64_t s : sums) {
        if (s <= head) continue;
        const Vertex y = s - head;
        if (y >= 1 && y <= n && y != head && !visited[y]) {
          ++candidates;
          next = y;
        }
      }
      if (candidates != 1)
        throw InvariantViolation("build_path: greedy step from " + std::to_string(head) + " has " +
                                 std::to_string(candidates) + " candidates in G_" + std::to_string(n));
      visited[next] = true;
      path.push_back(next);
    }
    if (path.back() != n)
      throw InvariantViolation("build_path: greedy walk did not end at " + std::to_string(n));
    return path;
  };

  std::vector<HamiltonPath> out;
  switch (k % 3) {
    case 0:
      out.push_back(greedy(fib(k) / 2));
      break;
    case 2:
      out.push_back(greedy(fib(k + 1) / 2));
      break;
    default: {  // two paths, differing only in the three vertices at the far end
      HamiltonPath first = greedy(fib(k - 1) / 2);
      HamiltonPath second = first;
      std::swap(second[0], second[2]);
      const Vertex expected = fib(k) - fib(k - 4) / 2;
      if (second[0] != expected)
        throw InvariantViolation("build_path: second endpoint " + std::to_string(second[0]) +
                                 " != " + std::to_string(expected));
      out.push_back(std::move(first));
      out.push_back(std::move(second));
      break;
    }
  }
  for (auto& p : out) {
    p = canonical(p);
    validate_or_throw(n, p, "build_path");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HamiltonPath> hamilton_paths(std::uint64_t n) {
  const auto cls = classify(n);
  if (cls.status == HamiltonStatus::kNone) return {};
  if (n <= kHamiltonEnumerationCap) return enumerate_paths_bruteforce(n);
  if (cls.reason == HamiltonReason::kFibonacci) return build_path(n);
  // n + 1 is Fibonacci: its paths end at the top vertex; dropping it yields
  // the paths one level down.
  std::vector<HamiltonPath> out;
  for (HamiltonPath p : build_path(n + 1)) {
    if (p.back() != n + 1)
      throw InvariantViolation("hamilton_paths: expected top-vertex endpoint for n+1");
    p.pop_back();
    p = canonical(p);
    validate_or_throw(n, p, "hamilton_paths");
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fibsum
