#include "fibsum/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stack>
#include <string>
#include <unordered_map>

namespace fibsum {

namespace {

struct VertexPairHash {
  std::size_t operator()(const EdgePair& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.first * 0x9e3779b97f4a7c15ull ^ e.second);
  }
};

EdgePair ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

// Decomposition under construction: bags in a forest with explicit adjacency,
// plus a designated covering bag per graph edge.
struct Builder {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::vector<std::size_t>> adj;
  std::vector<bool> alive;
  std::unordered_map<EdgePair, std::size_t, VertexPairHash> edge_bag;
  std::vector<std::size_t> home;  // vertex -> some live bag containing it

  std::size_t add_bag(std::vector<Vertex> content) {
    bags.push_back(std::move(content));
    adj.emplace_back();
    alive.push_back(true);
    return bags.size() - 1;
  }

  void link(std::size_t a, std::size_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  void step(Vertex m) {
    const int k = bracket(m);
    const Vertex u = fib(k + 1) - m;
    if (2 * m <= fib(k + 2)) {  // degree-1 vertex
      const std::size_t b = add_bag({m, u});
      link(b, home[u]);
      edge_bag[ordered(m, u)] = b;
      home[m] = b;
      return;
    }
    const Vertex w = fib(k + 2) - m;
    const Vertex x = m - fib(k);
    // {u, x} and {w, x} are edges of the smaller graph (sums fib(k-1) and
    // fib(k+1)), so both have covering bags already.
    const std::size_t qu = edge_bag.at(ordered(u, x));
    const std::size_t pw = edge_bag.at(ordered(w, x));
    // w was added as a pendant on x and has not been touched since, so its
    // bag is exactly {w, x} and is still a leaf. The new triangle {m, w, x}
    // absorbs it; {m, u, x} bridges to the bag covering {u, x}.
    if (bags[pw].size() != 2 || adj[pw].size() != 1)
      throw InvariantViolation("tree decomposition: pendant bag of " + std::to_string(w) +
                               " unexpectedly shared at m = " + std::to_string(m));
    const std::size_t b2 = add_bag({m, u, x});
    const std::size_t b1 = add_bag({m, w, x});
    link(b2, qu);
    link(b1, b2);
    // Detach and retire the pendant bag.
    const std::size_t t = adj[pw].front();
    adj[t].erase(std::find(adj[t].begin(), adj[t].end(), pw));
    adj[pw].clear();
    alive[pw] = false;
    edge_bag[ordered(w, x)] = b1;
    edge_bag[ordered(m, u)] = b2;
    edge_bag[ordered(m, w)] = b1;
    home[m] = b1;
    home[w] = b1;
    if (home[x] == pw) home[x] = b1;
  }

  TreeDecomposition finish() {
    TreeDecomposition td;
    std::vector<std::size_t> remap(bags.size());
    for (std::size_t i = 0; i < bags.size(); ++i) {
      if (!alive[i]) continue;
      remap[i] = td.bags.size();
      std::sort(bags[i].begin(), bags[i].end());
      td.bags.push_back(std::move(bags[i]));
    }
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (!alive[i]) continue;
      for (std::size_t j : adj[i])
        if (i < j) td.tree_edges.emplace_back(remap[i], remap[j]);
    }
    return td;
  }
};

// Union-find over bag indices for tree/connectivity checks.
struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::size_t TreeDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return w == 0 ? 0 : w - 1;
}

TreeDecomposition build_tree_decomposition(std::uint64_t n) {
  if (n == 0) throw DomainError("build_tree_decomposition: n must be >= 1");
  constexpr std::uint64_t kCap = 1ull << 26;
  if (n > kCap) throw RangeError("build_tree_decomposition: capped at n = " + std::to_string(kCap));
  Builder b;
  b.home.assign(static_cast<std::size_t>(n) + 1, 0);
  b.home[1] = b.add_bag({1});
  for (Vertex m = 2; m <= n; ++m) b.step(m);
  return b.finish();
}

ValidationResult validate_tree_decomposition(const FibSumGraph& g, const TreeDecomposition& td) {
  const std::uint64_t n = g.size();
  const std::size_t bag_count = td.bags.size();
  if (bag_count == 0) return {false, "no bags"};

  for (const auto& [a, b] : td.tree_edges)
    if (a >= bag_count || b >= bag_count || a == b) return {false, "tree edge out of range"};
  if (td.tree_edges.size() + 1 != bag_count) return {false, "tree edge count is not bags - 1"};
  Dsu dsu(bag_count);
  for (const auto& [a, b] : td.tree_edges)
    if (!dsu.unite(a, b)) return {false, "tree edges contain a cycle"};

  // Vertex coverage plus per-vertex bag/edge counts for running intersection:
  // a vertex's bags induce a subtree iff (bags containing it) = (tree edges
  // between two such bags) + 1.
  std::vector<std::uint64_t> bag_hits(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& bag : td.bags)
    for (Vertex v : bag) {
      if (v == 0 || v > n) return {false, "bag vertex out of range"};
      ++bag_hits[static_cast<std::size_t>(v)];
    }
  for (Vertex v = 1; v <= n; ++v)
    if (bag_hits[static_cast<std::size_t>(v)] == 0)
      return {false, "vertex " + std::to_string(v) + " not covered"};

  std::vector<std::uint64_t> link_hits(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [a, b] : td.tree_edges) {
    const auto& ba = td.bags[a];
    const auto& bb = td.bags[b];
    for (Vertex v : ba)
      if (std::find(bb.begin(), bb.end(), v) != bb.end()) ++link_hits[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 1; v <= n; ++v)
    if (link_hits[static_cast<std::size_t>(v)] + 1 != bag_hits[static_cast<std::size_t>(v)])
      return {false, "bags containing vertex " + std::to_string(v) + " are not a subtree"};

  // Edge coverage via each vertex's bag list.
  std::vector<std::vector<std::size_t>> holding(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < bag_count; ++i)
    for (Vertex v : td.bags[i]) holding[static_cast<std::size_t>(v)].push_back(i);
  for (const auto& [a, b] : g.edges()) {
    bool covered = false;
    for (std::size_t i : holding[static_cast<std::size_t>(a)]) {
      const auto& bag = td.bags[i];
      if (std::find(bag.begin(), bag.end(), b) != bag.end()) {
        covered = true;
        break;
      }
    }
    if (!covered)
      return {false, "edge {" + std::to_string(a) + ", " + std::to_string(b) + "} not covered"};
  }
  return {};
}

namespace {

// Circular order as a doubly-linked list over vertices 1..n.
struct Ring {
  std::vector<Vertex> next, prev;
  explicit Ring(std::uint64_t n) : next(static_cast<std::size_t>(n) + 1, 0), prev(static_cast<std::size_t>(n) + 1, 0) {}

  void init(Vertex v) { next[v] = prev[v] = v; }

  void insert_after(Vertex a, Vertex v) {
    const Vertex b = next[a];
    next[a] = v;
    prev[v] = a;
    next[v] = b;
    prev[b] = v;
  }

  void insert_before(Vertex a, Vertex v) { insert_after(prev[a], v); }

  void remove(Vertex v) {
    next[prev[v]] = next[v];
    prev[next[v]] = prev[v];
    next[v] = prev[v] = 0;
  }

  std::vector<Vertex> to_vector(Vertex start, std::uint64_t count) const {
    std::vector<Vertex> out;
    out.reserve(count);
    Vertex v = start;
    do {
      out.push_back(v);
      v = next[v];
    } while (v != start);
    return out;
  }
};

// Edges of the graph on the first m vertices incident to p.
std::vector<Vertex> current_neighbors(Vertex p, std::uint64_t m) {
  const int lo = bracket(p);
  const int hi = bracket(p + m);
  std::vector<Vertex> out;
  for (int i = lo + 1; i <= hi; ++i) {
    const std::uint64_t f = fib(i);
    if (f <= p) continue;
    const Vertex y = f - p;
    if (y >= 1 && y <= m && y != p) out.push_back(y);
  }
  return out;
}

// Does the chord {a, b} avoid crossings, given the rest of the order is
// valid? It does iff one of the two arcs between a and b is closed: every
// edge from an interior vertex stays interior or ends at a or b.
bool chord_feasible(const Ring& ring, Vertex a, Vertex b, std::uint64_t vertex_count) {
  // Walk both directions in lockstep to find the smaller arc first.
  Vertex fwd = ring.next[a], bwd = ring.prev[a];
  bool fwd_hit = false;
  while (true) {
    if (fwd == b) {
      fwd_hit = true;
      break;
    }
    if (bwd == b) break;
    fwd = ring.next[fwd];
    bwd = ring.prev[bwd];
  }
  for (int attempt = 0; attempt < 2; ++attempt) {
    const bool use_fwd = (attempt == 0) == fwd_hit;
    std::vector<Vertex> arc;
    for (Vertex p = use_fwd ? ring.next[a] : ring.prev[a]; p != b; p = use_fwd ? ring.next[p] : ring.prev[p])
      arc.push_back(p);
    std::sort(arc.begin(), arc.end());
    const auto interior = [&](Vertex q) { return std::binary_search(arc.begin(), arc.end(), q); };
    bool closed = true;
    for (Vertex p : arc) {
      for (Vertex q : current_neighbors(p, vertex_count)) {
        if (q == a || q == b || interior(q)) continue;
        closed = false;
        break;
      }
      if (!closed) break;
    }
    if (closed) return true;
  }
  return false;
}

// Exhaustive fallback: try every gap and both block orientations, checking
// the two non-consecutive new chords against all existing edges.
bool fallback_insert(Ring& ring, Vertex m, Vertex w, Vertex u, Vertex x, std::uint64_t vertex_count) {
  std::vector<Vertex> base = ring.to_vector(1, vertex_count - 2);
  std::vector<EdgePair> old_edges;
  for (Vertex p : base)
    for (Vertex q : current_neighbors(p, vertex_count))
      if (p < q && q != m && q != w) old_edges.push_back({p, q});
  const std::size_t len = base.size();
  std::vector<std::size_t> pos(vertex_count + 1, 0);
  for (std::size_t i = 0; i < len; ++i) pos[base[i]] = i;
  auto crosses = [&](std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
  };
  for (std::size_t gap = 0; gap < len; ++gap) {
    for (int orient = 0; orient < 2; ++orient) {
      // Positions in the new order of length len + 2.
      auto newpos = [&](Vertex v) -> std::size_t {
        if (v == m) return gap + (orient == 0 ? 1 : 2);
        if (v == w) return gap + (orient == 0 ? 2 : 1);
        const std::size_t p = pos[v];
        return p <= gap ? p : p + 2;
      };
      const std::size_t pu = newpos(u), pm = newpos(m), pw = newpos(w), px = newpos(x);
      bool ok = true;
      for (const auto& [a, b] : old_edges) {
        const std::size_t pa = newpos(a), pb = newpos(b);
        if (crosses(pu, pm, pa, pb) || crosses(pw, px, pa, pb)) {
          ok = false;
          break;
        }
      }
      if (ok && !crosses(pu, pm, pw, px)) {
        const Vertex anchor = base[gap];
        if (orient == 0) {
          ring.insert_after(anchor, m);
          ring.insert_after(m, w);
        } else {
          ring.insert_after(anchor, w);
          ring.insert_after(w, m);
        }
        return true;
      }
    }
  }
  return false;
}

}  // namespace

OuterplanarCertificate build_outerplanar_certificate(std::uint64_t n) {
  if (n == 0) throw DomainError("build_outerplanar_certificate: n must be >= 1");
  constexpr std::uint64_t kCap = 1ull << 26;
  if (n > kCap) throw RangeError("build_outerplanar_certificate: capped at n = " + std::to_string(kCap));
  Ring ring(n);
  ring.init(1);
  for (Vertex m = 2; m <= n; ++m) {
    const int k = bracket(m);
    const Vertex u = fib(k + 1) - m;
    if (2 * m <= fib(k + 2)) {
      ring.insert_after(u, m);  // pendant: next to its only neighbor
      continue;
    }
    const Vertex w = fib(k + 2) - m;
    const Vertex x = m - fib(k);
    // Re-seat the degree-2 pair (m, w) against the edge {u, x}: w detaches
    // from wherever its pendant insertion put it, and the block m, w goes
    // next to the edge, with w toward x and m toward u. When u and x are
    // order-adjacent (the edge visibly on the hull) every new chord lands
    // between consecutive vertices; otherwise the four gaps touching u or x
    // are tried, each needing one chord-feasibility check.
    ring.remove(w);
    if (ring.next[x] == u) {
      ring.insert_after(x, w);
      ring.insert_after(w, m);
      continue;
    }
    if (ring.next[u] == x) {
      ring.insert_after(u, m);
      ring.insert_after(m, w);
      continue;
    }
    bool placed = false;
    for (int candidate = 0; candidate < 4 && !placed; ++candidate) {
      Vertex check_a = u, check_b = m;  // the one non-consecutive chord
      switch (candidate) {
        case 0:  // ..., m, w, x
          ring.insert_before(x, w);
          ring.insert_before(w, m);
          break;
        case 1:  // x, w, m, ...
          ring.insert_after(x, w);
          ring.insert_after(w, m);
          break;
        case 2:  // u, m, w, ...
          ring.insert_after(u, m);
          ring.insert_after(m, w);
          check_a = w;
          check_b = x;
          break;
        default:  // ..., w, m, u
          ring.insert_before(u, m);
          ring.insert_before(m, w);
          check_a = w;
          check_b = x;
          break;
      }
      if (chord_feasible(ring, check_a, check_b, m)) {
        placed = true;
      } else {
        ring.remove(m);
        ring.remove(w);
      }
    }
    if (!placed && !fallback_insert(ring, m, w, u, x, m))
      throw InvariantViolation("outerplanar certificate: no crossing-free slot for vertex " +
                               std::to_string(m));
  }
  return OuterplanarCertificate{ring.to_vector(1, n)};
}

ValidationResult validate_outerplanar_certificate(const FibSumGraph& g, const OuterplanarCertificate& cert) {
  const std::uint64_t n = g.size();
  if (cert.order.size() != n) throw DomainError("outerplanar validation: order has wrong length");
  std::vector<std::size_t> pos(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < cert.order.size(); ++i) {
    const Vertex v = cert.order[i];
    if (v == 0 || v > n || seen[v]) throw DomainError("outerplanar validation: order is not a permutation");
    seen[v] = true;
    pos[v] = i;
  }
  // Cut the circle at position 0: edges become intervals, and the order is
  // crossing-free iff the intervals are laminar, which the stack detects.
  std::vector<std::vector<std::pair<std::size_t, EdgePair>>> opens(n), closes(n);
  for (const auto& e : g.edges()) {
    std::size_t i = pos[e.first], j = pos[e.second];
    if (i > j) std::swap(i, j);
    opens[i].push_back({j, e});
    closes[j].push_back({i, e});
  }
  std::stack<std::pair<std::size_t, EdgePair>> open_chords;  // (close position, edge)
  for (std::size_t p = 0; p < n; ++p) {
    for (const auto& [start, e] : closes[p]) {
      (void)start;
      if (open_chords.empty() || open_chords.top().first != p) {
        const std::string other = open_chords.empty()
                                      ? "?"
                                      : "{" + std::to_string(open_chords.top().second.first) + ", " +
                                            std::to_string(open_chords.top().second.second) + "}";
        return {false, "edges {" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                           "} and " + other + " interleave"};
      }
      open_chords.pop();
    }
    auto& out = opens[p];
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& oc : out) open_chords.push(oc);
  }
  if (!open_chords.empty()) return {false, "unbalanced chord stack"};
  return {};
}

ValidationResult validate_circular_order_bruteforce(std::uint64_t n, const std::vector<Vertex>& order,
                                                    const std::vector<EdgePair>& edges) {
  if (order.size() != n) throw DomainError("order has wrong length");
  std::vector<std::size_t> pos(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v == 0 || v > n || seen[v]) throw DomainError("order is not a permutation");
    seen[v] = true;
    pos[v] = i;
  }
  auto crosses = [&](const EdgePair& e, const EdgePair& f) {
    std::size_t a1 = pos[e.first], a2 = pos[e.second], b1 = pos[f.first], b2 = pos[f.second];
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
  };
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (crosses(edges[i], edges[j]))
        return {false, "edges {" + std::to_string(edges[i].first) + ", " + std::to_string(edges[i].second) +
                           "} and {" + std::to_string(edges[j].first) + ", " + std::to_string(edges[j].second) +
                           "} interleave"};
  return {};
}

}  // namespace fibsum
