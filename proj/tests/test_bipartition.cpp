#include <doctest.h>

#include <deque>

#include "fibsum/bipartition.hpp"
#include "fibsum/graph.hpp"
#include "fibsum/verify.hpp"

using namespace fibsum;

namespace {

// Independent colouring: plain BFS 2-colouring of the explicit graph with
// colour(1) = 1. Fails the test if the graph were not bipartite.
std::vector<int> bfs_colours(std::uint64_t n) {
  const FibSumGraph g(n);
  std::vector<int> col(n + 1, -1);
  col[1] = 1;
  std::deque<Vertex> queue{1};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (col[w] == -1) {
        col[w] = 1 - col[v];
        queue.push_back(w);
      } else {
        REQUIRE(col[w] == 1 - col[v]);
      }
    }
  }
  return col;
}

}  // namespace

TEST_CASE("colour closed form matches BFS colouring") {
  const auto col = bfs_colours(3000);
  for (Vertex x = 1; x <= 3000; ++x) CHECK(colour_of(x) == col[x]);
}

TEST_CASE("colour anchors") {
  CHECK(colour_of(1) == 1);
  CHECK(colour_of(13) == 0);  // odd-index Fibonacci
  CHECK(colour_of(20) == 0);  // opposite class from 1
  CHECK(colour_of(2) == 0);
  CHECK(colour_of(3) == 1);
  // Half-Fibonacci anchors.
  CHECK(colour_of(4) == 0);    // fib(6)/2
  CHECK(colour_of(17) == 1);   // fib(9)/2
  CHECK(colour_of(72) == 0);   // fib(12)/2
}

TEST_CASE("reduction rule") {
  // colour(N) = colour(N - fib(k)) off the half-Fibonacci exception.
  for (std::uint64_t N = 4; N <= 100000; ++N) {
    const int k = bracket(N);
    if (N == fib(k)) continue;
    if (2 * N == fib(k + 2)) {
      CHECK(colour_of(N) == (k % 6 == 1 ? 1 : 0));
    } else {
      CHECK(colour_of(N) == colour_of(N - fib(k)));
    }
  }
}

TEST_CASE("part sizes") {
  CHECK(part_sizes(20) == PartSizes{10, 10});
  CHECK(part_sizes(1) == PartSizes{1, 0});
  // The printed large example resolves to 7164 (whose Zeckendorf expansion
  // uses only indices 2 mod 6), not to fib(20) = 6765.
  CHECK(part_sizes_scan(7164) == PartSizes{3584, 3580});
  CHECK(part_sizes(7164) == PartSizes{3584, 3580});
  CHECK(part_sizes_scan(6765) == PartSizes{3383, 3382});
  CHECK(part_sizes(6765) == PartSizes{3383, 3382});
}

TEST_CASE("prefix imbalance at Fibonacci arguments") {
  CHECK(s_of(8).twice == 0);    // index 6
  CHECK(s_of(21).twice == 1);   // index 8
  CHECK(s_of(13).twice == -1);  // index 7
  CHECK(s_of(0).twice == 0);
  for (int k = 3; k <= 40; ++k) {
    const int r = k % 6;
    const std::int64_t expected = (r == 0 || r == 3) ? 0 : ((r == 2 || r == 4) ? 1 : -1);
    CHECK(s_of(fib(k)).twice == expected);
  }
}

TEST_CASE("s recursion equals direct summation") {
  std::int64_t prefix = 0;
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    prefix += colour_of(n);
    CHECK(s_of(n).twice == 2 * prefix - static_cast<std::int64_t>(n));
  }
}

TEST_CASE("imbalance witnesses") {
  CHECK(imbalance_witness(1) == 246);
  CHECK(imbalance_witness(2) == 79452);
  for (std::uint64_t z = 1; z <= 4; ++z) {
    const std::uint64_t n = imbalance_witness(z);
    const auto parts = part_sizes(n);
    CHECK(2 * parts.size1 + 2 * z == n);  // |size1 - n/2| = z exactly
  }
  // Scan confirmation at the two desk-scale witnesses.
  CHECK(part_sizes_scan(246) == part_sizes(246));
  CHECK(part_sizes_scan(79452) == part_sizes(79452));
  CHECK_THROWS_AS(imbalance_witness(0), DomainError);
  CHECK_THROWS_AS(imbalance_witness(8), RangeError);
}

TEST_CASE("properness sweep") {
  const auto bad = suites::bipartite_properness(600);
  CHECK_MESSAGE(!bad.has_value(), bad.value_or(""));
}

TEST_CASE("witness suite") {
  const auto bad = suites::bipartition_witnesses();
  CHECK_MESSAGE(!bad.has_value(), bad.value_or(""));
}
