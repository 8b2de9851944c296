#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fibsum/graph.hpp"
#include "fibsum/simple_graph.hpp"

namespace fibsum {

/// A cyclic vertex sequence whose consecutive sums (wrapping around) are
/// Fibonacci numbers. Always of even length at least 4.
using CycleWitness = std::vector<Vertex>;

/// Whether seq is a cycle of g (distinct vertices, length >= 4 here since
/// the graphs are triangle-free, consecutive adjacency including the wrap).
bool is_cycle_of(const SimpleGraph& g, const CycleWitness& seq);
bool is_cycle_of(const FibSumGraph& g, const CycleWitness& seq);

/// Girth by closed form: nullopt (acyclic) for n <= 6, otherwise 4.
std::optional<std::uint64_t> girth(std::uint64_t n);

/// Girth by bounded breadth-first search; the oracle twin of girth().
std::optional<std::uint64_t> girth_bruteforce(std::uint64_t n);

/// The 4-cycle hanging off the top vertex: (n - fib(k), fib(k+2) - n, n,
/// fib(k+1) - n), defined when 2n > fib(k+2) with k = bracket(n).
CycleWitness tail_four_cycle(std::uint64_t n);

/// Cycle of length 2k, k >= 2, inside the graph on fib(2k+3) - 1 vertices:
/// c1 = 1, c2 = 4, c_i = fib(i+4) - c_{i-1}; the last entry is fib(2k+3) - 1.
CycleWitness even_cycle(std::uint64_t k);

using Chord = EdgePair;
using ChordPair = std::pair<Chord, Chord>;

/// All pairs of chords of c that interleave around the cycle. Predicted to
/// be empty for every cycle of every Fibonacci-sum graph.
std::vector<ChordPair> crossing_chords(const SimpleGraph& g, const CycleWitness& c);
std::vector<ChordPair> crossing_chords(const FibSumGraph& g, const CycleWitness& c);

/// For a cycle of length >= 6: the chord {fib(k+1) - m, m - fib(k)} where m
/// is the cycle's largest vertex and k = bracket(m). Verified to be an edge,
/// a chord of c, and to cut off exactly two cycle vertices on one side;
/// failure of any of those is an InvariantViolation.
Chord four_cycle_chord(const SimpleGraph& g, const CycleWitness& c);
Chord four_cycle_chord(const FibSumGraph& g, const CycleWitness& c);

/// An edge plus three internally disjoint length-3 paths between its ends
/// (eight vertices total).
struct HSubgraphWitness {
  Vertex u = 0, v = 0;
  std::array<std::pair<Vertex, Vertex>, 3> paths{};  // (a_i, b_i): u-a_i-b_i-v
};

/// Search for the forbidden configuration above; predicted absent from every
/// Fibonacci-sum graph.
std::optional<HSubgraphWitness> detect_h_subgraph(const SimpleGraph& g);
std::optional<HSubgraphWitness> detect_h_subgraph(const FibSumGraph& g);

/// Enumeration cap for enumerate_cycles.
inline constexpr std::uint64_t kCycleEnumerationCap = 25;

/// Every simple cycle of g, canonicalized (smallest vertex first, smaller
/// neighbor direction), sorted. RangeError above the cap.
std::vector<CycleWitness> enumerate_cycles(const SimpleGraph& g);

}  // namespace fibsum
