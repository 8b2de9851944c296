#include "fibsum/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <string>

namespace fibsum {

namespace {

template <class Graph>
bool is_cycle_impl(const Graph& g, const CycleWitness& seq) {
  const std::size_t len = seq.size();
  if (len < 4) return false;
  std::vector<Vertex> sorted(seq);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : seq)
    if (v == 0 || v > g.size()) return false;
  for (std::size_t i = 0; i < len; ++i)
    if (!g.adjacent(seq[i], seq[(i + 1) % len])) return false;
  return true;
}

std::map<Vertex, std::size_t> position_index(const CycleWitness& c) {
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < c.size(); ++i) pos[c[i]] = i;
  return pos;
}

bool interleave(std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

// Chords of c present in g, as position pairs (i < j).
template <class Graph>
std::vector<std::pair<std::size_t, std::size_t>> chord_positions(const Graph& g, const CycleWitness& c) {
  const auto pos = position_index(c);
  const std::size_t len = c.size();
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  for (const Vertex v : c)
    for (const Vertex w : g.neighbors(v)) {
      if (v >= w) continue;
      auto it = pos.find(w);
      if (it == pos.end()) continue;
      const std::size_t i = pos.at(v), j = it->second;
      const std::size_t d = i < j ? j - i : i - j;
      if (d == 1 || d == len - 1) continue;  // cycle edge
      chords.emplace_back(std::min(i, j), std::max(i, j));
    }
  return chords;
}

template <class Graph>
std::vector<ChordPair> crossing_chords_impl(const Graph& g, const CycleWitness& c) {
  if (!is_cycle_impl(g, c)) throw DomainError("crossing_chords: sequence is not a cycle of the graph");
  const auto chords = chord_positions(g, c);
  std::vector<ChordPair> out;
  for (std::size_t a = 0; a < chords.size(); ++a)
    for (std::size_t b = a + 1; b < chords.size(); ++b)
      if (interleave(chords[a].first, chords[a].second, chords[b].first, chords[b].second)) {
        const auto edge_at = [&](std::size_t i, std::size_t j) {
          return Chord{std::min(c[i], c[j]), std::max(c[i], c[j])};
        };
        out.emplace_back(edge_at(chords[a].first, chords[a].second),
                         edge_at(chords[b].first, chords[b].second));
      }
  return out;
}

template <class Graph>
Chord four_cycle_chord_impl(const Graph& g, const CycleWitness& c) {
  if (!is_cycle_impl(g, c)) throw DomainError("four_cycle_chord: sequence is not a cycle of the graph");
  if (c.size() < 6) throw DomainError("four_cycle_chord: cycle must have at least 6 vertices");
  const Vertex m = *std::max_element(c.begin(), c.end());
  const int k = bracket(m);
  if (m <= fib(k))
    throw InvariantViolation("four_cycle_chord: largest cycle vertex " + std::to_string(m) +
                             " is a Fibonacci number");
  const Vertex a = fib(k + 1) - m;
  const Vertex b = m - fib(k);
  auto fail = [&](const std::string& why) {
    throw InvariantViolation("four_cycle_chord: predicted chord {" + std::to_string(a) + ", " +
                             std::to_string(b) + "} " + why);
  };
  if (!g.adjacent(a, b)) fail("is not an edge");
  const auto pos = position_index(c);
  const auto ia = pos.find(a), ib = pos.find(b);
  if (ia == pos.end() || ib == pos.end()) fail("does not lie on the cycle");
  std::size_t i = ia->second, j = ib->second;
  if (i > j) std::swap(i, j);
  const std::size_t inside = j - i - 1;
  const std::size_t outside = c.size() - inside - 2;
  if (inside < 1 || outside < 1) fail("is a cycle edge, not a chord");
  if (inside != 2 && outside != 2) fail("does not cut off exactly two cycle vertices");
  return {std::min(a, b), std::max(a, b)};
}

std::optional<HSubgraphWitness> detect_h_impl(const SimpleGraph& g) {
  for (Vertex u = 1; u <= g.size(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u >= v) continue;
      // Length-3 u-v paths u-a-b-v avoiding the edge's own endpoints.
      std::vector<std::pair<Vertex, Vertex>> legs;
      for (Vertex a : g.neighbors(u)) {
        if (a == v) continue;
        for (Vertex b : g.neighbors(v)) {
          if (b == u || b == a) continue;
          if (g.adjacent(a, b)) legs.emplace_back(a, b);
        }
      }
      const auto disjoint = [](const std::pair<Vertex, Vertex>& p, const std::pair<Vertex, Vertex>& q) {
        return p.first != q.first && p.first != q.second && p.second != q.first && p.second != q.second;
      };
      for (std::size_t i = 0; i < legs.size(); ++i)
        for (std::size_t j = i + 1; j < legs.size(); ++j) {
          if (!disjoint(legs[i], legs[j])) continue;
          for (std::size_t k = j + 1; k < legs.size(); ++k)
            if (disjoint(legs[i], legs[k]) && disjoint(legs[j], legs[k]))
              return HSubgraphWitness{u, v, {legs[i], legs[j], legs[k]}};
        }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_cycle_of(const SimpleGraph& g, const CycleWitness& seq) { return is_cycle_impl(g, seq); }
bool is_cycle_of(const FibSumGraph& g, const CycleWitness& seq) { return is_cycle_impl(g, seq); }

std::optional<std::uint64_t> girth(std::uint64_t n) {
  if (n == 0) throw DomainError("girth: n must be >= 1");
  if (n > max_vertex_count()) throw RangeError("girth: n beyond checked range");
  if (n <= 6) return std::nullopt;
  return 4;
}

std::optional<std::uint64_t> girth_bruteforce(std::uint64_t n) {
  const SimpleGraph g = SimpleGraph::from_fib(FibSumGraph(n));
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best = kInf;
  std::vector<std::uint64_t> dist(n + 1);
  std::vector<Vertex> parent(n + 1);
  // Shortest cycle through each root; the minimum over roots is the girth.
  for (Vertex root = 1; root <= n; ++root) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), 0);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      if (best != kInf && 2 * dist[v] + 1 >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == kInf) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v] && parent[w] != v) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
    if (best == 3) break;
  }
  if (best == kInf) return std::nullopt;
  return best;
}

CycleWitness tail_four_cycle(std::uint64_t n) {
  if (n == 0) throw DomainError("tail_four_cycle: n must be >= 1");
  if (n > max_vertex_count()) throw RangeError("tail_four_cycle: n beyond checked range");
  const int k = bracket(n);
  if (2 * n <= fib(k + 2))
    throw DomainError("tail_four_cycle: requires 2n > fib(k+2), n = " + std::to_string(n));
  CycleWitness c{n - fib(k), fib(k + 2) - n, n, fib(k + 1) - n};
  for (std::size_t i = 0; i < 4; ++i)
    if (!is_fibonacci(c[i] + c[(i + 1) % 4]))
      throw InvariantViolation("tail_four_cycle: consecutive sum not Fibonacci at n = " + std::to_string(n));
  return c;
}

CycleWitness even_cycle(std::uint64_t k) {
  if (k < 2) throw DomainError("even_cycle: k must be >= 2");
  if (2 * k + 4 > static_cast<std::uint64_t>(kFibMaxIndex))
    throw RangeError("even_cycle: fib(2k+4) beyond checked range");
  CycleWitness c{1, 4};
  for (std::uint64_t i = 3; i <= 2 * k; ++i) c.push_back(fib(static_cast<int>(i) + 4) - c.back());
  const std::uint64_t limit = fib(static_cast<int>(2 * k + 3)) - 1;
  if (c.back() != limit)
    throw InvariantViolation("even_cycle: final entry " + std::to_string(c.back()) +
                             " != " + std::to_string(limit));
  std::vector<Vertex> sorted(c);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 1)
    throw InvariantViolation("even_cycle: entries not distinct in range");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!is_fibonacci(c[i] + c[(i + 1) % c.size()]))
      throw InvariantViolation("even_cycle: consecutive sum not Fibonacci");
  return c;
}

std::vector<ChordPair> crossing_chords(const SimpleGraph& g, const CycleWitness& c) {
  return crossing_chords_impl(g, c);
}
std::vector<ChordPair> crossing_chords(const FibSumGraph& g, const CycleWitness& c) {
  return crossing_chords_impl(g, c);
}

Chord four_cycle_chord(const SimpleGraph& g, const CycleWitness& c) { return four_cycle_chord_impl(g, c); }
Chord four_cycle_chord(const FibSumGraph& g, const CycleWitness& c) { return four_cycle_chord_impl(g, c); }

std::optional<HSubgraphWitness> detect_h_subgraph(const SimpleGraph& g) { return detect_h_impl(g); }
std::optional<HSubgraphWitness> detect_h_subgraph(const FibSumGraph& g) {
  return detect_h_impl(SimpleGraph::from_fib(g));
}

std::vector<CycleWitness> enumerate_cycles(const SimpleGraph& g) {
  const std::uint64_t n = g.size();
  if (n > kCycleEnumerationCap)
    throw RangeError("enumerate_cycles: n > " + std::to_string(kCycleEnumerationCap));
  std::vector<CycleWitness> out;
  std::vector<Vertex> path;
  std::vector<bool> on_path(n + 1, false);
  // Cycles rooted at their smallest vertex; reflections removed by requiring
  // the second vertex to be smaller than the closing one.
  auto dfs = [&](auto&& self, Vertex root, Vertex head) -> void {
    for (Vertex w : g.neighbors(head)) {
      if (w == root && path.size() >= 4) {
        if (path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (w <= root || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, root, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (Vertex root = 1; root <= n; ++root) {
    path = {root};
    on_path.assign(n + 1, false);
    on_path[root] = true;
    dfs(dfs, root, root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fibsum
