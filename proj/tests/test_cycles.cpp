#include <doctest.h>

#include "fibsum/cycles.hpp"
#include "fibsum/verify.hpp"

using namespace fibsum;

namespace {

bool same_cycle(CycleWitness a, CycleWitness b) {
  if (a.size() != b.size()) return false;
  const auto canon = [](CycleWitness c) {
    const auto min_it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), min_it, c.end());
    if (c.size() > 1 && c[1] > c.back()) {
      std::reverse(c.begin() + 1, c.end());
    }
    return c;
  };
  return canon(std::move(a)) == canon(std::move(b));
}

}  // namespace

TEST_CASE("girth closed form") {
  CHECK(girth(6) == std::nullopt);
  CHECK(girth(1) == std::nullopt);
  CHECK(girth(7) == 4);
  CHECK(girth(2000) == 4);
}

TEST_CASE("girth search oracle") {
  for (std::uint64_t n = 1; n <= 300; ++n) CHECK(girth_bruteforce(n) == girth(n));
  CHECK(girth_bruteforce(7) == 4);  // the cycle (1,2,6,7)
  CHECK(girth_bruteforce(2000) == 4);
}

TEST_CASE("tail four-cycle") {
  CHECK(same_cycle(tail_four_cycle(18), CycleWitness{5, 3, 18, 16}));
  CHECK(same_cycle(tail_four_cycle(7), CycleWitness{2, 6, 7, 1}));
  CHECK(is_cycle_of(FibSumGraph(18), tail_four_cycle(18)));
  // Exactly at the half boundary the construction is undefined.
  CHECK_THROWS_AS(tail_four_cycle(17), DomainError);  // 2*17 < fib(9) = 34 is false... boundary 34
  CHECK_THROWS_AS(tail_four_cycle(8), DomainError);
}

TEST_CASE("even cycles") {
  CHECK(even_cycle(2) == CycleWitness{1, 4, 9, 12});
  CHECK(even_cycle(3) == CycleWitness{1, 4, 9, 12, 22, 33});
  for (std::uint64_t k = 2; k <= 12; ++k) {
    const auto c = even_cycle(k);
    CHECK(c.size() == 2 * k);
    CHECK(c.back() == fib(static_cast<int>(2 * k + 3)) - 1);
    CHECK(is_cycle_of(FibSumGraph(fib(static_cast<int>(2 * k + 3)) - 1), c));
  }
  CHECK_THROWS_AS(even_cycle(1), DomainError);
  CHECK_THROWS_AS(even_cycle(50), RangeError);
}

TEST_CASE("crossing chords detector") {
  // Positive control: a 6-cycle with two crossing chords.
  SimpleGraph control(6);
  for (Vertex v = 1; v <= 6; ++v) control.add_edge(v, v % 6 + 1);
  control.add_edge(1, 4);
  control.add_edge(2, 5);
  const CycleWitness hexagon{1, 2, 3, 4, 5, 6};
  const auto crossings = crossing_chords(control, hexagon);
  REQUIRE(crossings.size() == 1);
  CHECK(crossings[0].first == Chord{1, 4});
  CHECK(crossings[0].second == Chord{2, 5});

  // Every cycle of every Fibonacci-sum graph in range: none.
  const auto g12 = SimpleGraph::from_fib(FibSumGraph(12));
  CHECK(crossing_chords(g12, CycleWitness{1, 4, 9, 12}).empty());
  CHECK_THROWS_AS(crossing_chords(g12, CycleWitness{1, 2, 3, 4}), DomainError);
}

TEST_CASE("four-cycle-forming chord") {
  const FibSumGraph g33(33);
  const auto c = even_cycle(3);  // lives in G_33
  const auto chord = four_cycle_chord(g33, c);
  CHECK(chord == Chord{1, 12});  // fib(9) - 33 = 1, 33 - fib(8) = 12
  CHECK_THROWS_AS(four_cycle_chord(g33, CycleWitness{1, 4, 9, 12}), DomainError);
}

TEST_CASE("forbidden subgraph detector") {
  CHECK_FALSE(detect_h_subgraph(FibSumGraph(50)).has_value());
  CHECK_FALSE(detect_h_subgraph(FibSumGraph(8)).has_value());
  // Positive control: edge {1, 2} plus three disjoint length-3 paths.
  SimpleGraph h(8);
  h.add_edge(1, 2);
  const Vertex a[3] = {3, 5, 7}, b[3] = {4, 6, 8};
  for (int i = 0; i < 3; ++i) {
    h.add_edge(1, a[i]);
    h.add_edge(a[i], b[i]);
    h.add_edge(b[i], 2);
  }
  const auto witness = detect_h_subgraph(h);
  REQUIRE(witness.has_value());
  CHECK(witness->u == 1);
  CHECK(witness->v == 2);
}

TEST_CASE("cycle enumeration") {
  const auto g7 = SimpleGraph::from_fib(FibSumGraph(7));
  const auto cycles7 = enumerate_cycles(g7);
  REQUIRE(cycles7.size() == 1);
  CHECK(same_cycle(cycles7.front(), CycleWitness{1, 2, 6, 7}));
  CHECK(enumerate_cycles(SimpleGraph::from_fib(FibSumGraph(6))).empty());
  CHECK_THROWS_AS(enumerate_cycles(SimpleGraph::from_fib(FibSumGraph(26))), RangeError);
  // Bipartite parity: all enumerated cycles are even.
  for (std::uint64_t n = 7; n <= 25; ++n)
    for (const auto& c : enumerate_cycles(SimpleGraph::from_fib(FibSumGraph(n))))
      CHECK(c.size() % 2 == 0);
}

TEST_CASE("chord structure sweep") {
  const auto bad = suites::cycle_chords(25);
  CHECK_MESSAGE(!bad.has_value(), bad.value_or(""));
}

TEST_CASE("H-freeness sweep") {
  const auto bad = suites::h_freeness(300);
  CHECK_MESSAGE(!bad.has_value(), bad.value_or(""));
}
