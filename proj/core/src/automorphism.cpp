#include "fibsum/automorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "fibsum/graph.hpp"
#include "fibsum/simple_graph.hpp"

namespace fibsum {

namespace {

// Iterated neighbor-degree refinement: colour classes stable under the
// multiset of neighbor colours. Automorphisms preserve classes.
std::vector<int> refine_colours(const SimpleGraph& g) {
  const std::uint64_t n = g.size();
  std::vector<int> colour(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) colour[v] = static_cast<int>(g.degree(v));
  for (std::uint64_t round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> index;
    std::vector<std::pair<int, std::vector<int>>> sig(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<int> around;
      around.reserve(g.degree(v));
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      sig[v] = {colour[v], std::move(around)};
      index.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : index) id = next++;
    std::vector<int> fresh(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) fresh[v] = index.at(sig[v]);
    if (fresh == colour) break;
    colour = std::move(fresh);
  }
  return colour;
}

struct AutSearch {
  const SimpleGraph& g;
  std::uint64_t n;
  std::vector<int> colour;
  std::map<int, std::vector<Vertex>> classes;  // colour -> members
  std::vector<Vertex> order;                   // assignment order: rarest classes first
  std::vector<Vertex> image;                   // 0 = unassigned
  std::vector<bool> used;
  std::vector<std::vector<Vertex>> found;

  explicit AutSearch(const SimpleGraph& graph) : g(graph), n(graph.size()) {
    colour = refine_colours(g);
    for (Vertex v = 1; v <= n; ++v) classes[colour[v]].push_back(v);
    std::vector<std::pair<std::size_t, int>> sized;
    for (auto& [c, vs] : classes) sized.push_back({vs.size(), c});
    std::sort(sized.begin(), sized.end());
    for (auto& [sz, c] : sized) {
      (void)sz;
      for (Vertex v : classes[c]) order.push_back(v);
    }
    image.assign(n + 1, 0);
    used.assign(n + 1, false);
  }

  // The candidate image must preserve adjacency and non-adjacency against
  // everything already assigned. Assigned neighbors of v must map into
  // neighbors of w; matching counts of assigned-neighbors and used-neighbor
  // images then rules out a non-neighbor landing on a neighbor of w.
  bool consistent(Vertex v, Vertex w) {
    std::uint64_t adj_v = 0;
    for (Vertex q : g.neighbors(v)) {
      const Vertex iq = image[q];
      if (iq == 0) continue;
      if (!g.adjacent(w, iq)) return false;
      ++adj_v;
    }
    std::uint64_t adj_w = 0;
    for (Vertex q : g.neighbors(w))
      if (used[q]) ++adj_w;
    return adj_v == adj_w;
  }

  void dfs(std::size_t i) {
    if (i == order.size()) {
      found.emplace_back(image.begin() + 1, image.end());
      return;
    }
    const Vertex v = order[i];
    for (Vertex w : classes.at(colour[v])) {
      if (used[w] || !consistent(v, w)) continue;
      image[v] = w;
      used[w] = true;
      dfs(i + 1);
      used[w] = false;
      image[v] = 0;
    }
  }
};

AutomorphismGroup group_from_permutations(std::uint64_t n, const std::vector<std::vector<Vertex>>& perms) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> nontrivial;
  for (const auto& p : perms) {
    std::vector<std::pair<Vertex, Vertex>> swaps;
    bool involution = true;
    for (Vertex v = 1; v <= n; ++v) {
      const Vertex w = p[v - 1];
      if (w == v) continue;
      if (p[w - 1] != v) involution = false;
      if (v < w) swaps.emplace_back(v, w);
    }
    if (!involution)
      throw InvariantViolation("aut_bruteforce: non-involution automorphism at n = " + std::to_string(n));
    if (!swaps.empty()) nontrivial.push_back(std::move(swaps));
  }
  if (nontrivial.size() > 1)
    throw InvariantViolation("aut_bruteforce: more than one non-trivial automorphism at n = " +
                             std::to_string(n));
  AutomorphismGroup out{n, {}};
  if (!nontrivial.empty()) out.swaps = nontrivial.front();
  return out;
}

}  // namespace

AutomorphismGroup aut_bruteforce(std::uint64_t n) {
  if (n == 0) throw DomainError("aut_bruteforce: n must be >= 1");
  if (n > kAutBruteforceCap)
    throw RangeError("aut_bruteforce: n > " + std::to_string(kAutBruteforceCap));
  if (n == 1) return {1, {}};
  const SimpleGraph g = SimpleGraph::from_fib(FibSumGraph(n));
  AutSearch search(g);
  search.dfs(0);
  return group_from_permutations(n, search.found);
}

AutomorphismGroup aut_closed_form(std::uint64_t n) {
  if (n < 9) throw DomainError("aut_closed_form: defined for n >= 9");
  if (n > max_vertex_count()) throw RangeError("aut_closed_form: n beyond checked range");
  if (n < 34) return aut_bruteforce(n);

  int t = bracket(n);
  t -= t % 3;  // window index: t = 0 (mod 3), fib(t) <= n < fib(t+3)
  if (t % 3 != 0 || fib(t) > n || n >= fib(t + 3) || t < 9)
    throw InvariantViolation("aut_closed_form: window location failed at n = " + std::to_string(n));

  const std::uint64_t ft = fib(t), ft3 = fib(t + 3), ftm3 = fib(t - 3);
  if (ft % 2 != 0 || ft3 % 2 != 0 || ftm3 % 2 != 0)
    throw InvariantViolation("aut_closed_form: expected even Fibonacci numbers at index 0 mod 3");
  const std::uint64_t half = ft / 2;
  const std::uint64_t one_swap_lo = ft + half;                 // 3 fib(t) / 2
  const std::uint64_t one_swap_hi = ft3 / 2;
  const std::uint64_t two_swap_lo = fib(t + 2) + ftm3 / 2;
  const std::uint64_t two_swap_hi = ft3 - half;

  AutomorphismGroup out{n, {}};
  if (n >= one_swap_lo && n < one_swap_hi) {
    out.swaps = {{half, ft + half}};
  } else if (n >= two_swap_lo && n < two_swap_hi) {
    out.swaps = {{half, ft + half}, {one_swap_hi, two_swap_lo}};
  }
  return out;
}

std::vector<IntervalRow> interval_report(std::uint64_t max_n) {
  if (max_n > max_vertex_count()) throw RangeError("interval_report: max beyond checked range");
  std::vector<IntervalRow> rows;
  for (std::uint64_t n = 7; n <= max_n; ++n) {
    const int order = (n < 9 ? aut_bruteforce(n) : aut_closed_form(n)).order();
    if (!rows.empty() && rows.back().order == order && rows.back().hi + 1 == n)
      rows.back().hi = n;
    else
      rows.push_back({n, n, order});
  }
  return rows;
}

bool involution_preserves_edges(std::uint64_t n, const std::vector<std::pair<Vertex, Vertex>>& swaps) {
  const FibSumGraph g(n);
  std::map<Vertex, Vertex> phi;
  for (const auto& [a, b] : swaps) {
    phi[a] = b;
    phi[b] = a;
  }
  const auto image = [&](Vertex v) {
    auto it = phi.find(v);
    return it == phi.end() ? v : it->second;
  };
  // Only edges incident to swapped vertices can move.
  for (const auto& [a, b] : phi) {
    (void)b;
    for (Vertex y : g.neighbors(a))
      if (!g.adjacent(image(a), image(y))) return false;
  }
  return true;
}

}  // namespace fibsum
