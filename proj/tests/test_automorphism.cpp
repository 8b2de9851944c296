#include <doctest.h>

#include <fstream>

#include "fibsum/automorphism.hpp"
#include "fibsum/graph.hpp"
#include "fibsum/hamilton.hpp"
#include "fibsum/verify.hpp"

using namespace fibsum;

TEST_CASE("closed form at anchor points") {
  CHECK(aut_closed_form(40).order() == 1);
  CHECK(aut_closed_form(60).swaps == std::vector<std::pair<Vertex, Vertex>>{{17, 51}});
  CHECK(aut_closed_form(100).swaps == std::vector<std::pair<Vertex, Vertex>>{{17, 51}, {72, 93}});
  CHECK(aut_closed_form(51).order() == 2);
  CHECK(aut_closed_form(50).order() == 1);
  CHECK(aut_closed_form(72).order() == 1);
  CHECK(aut_closed_form(93).order() == 2);
  CHECK(aut_closed_form(126).order() == 2);
  CHECK(aut_closed_form(127).order() == 1);
  CHECK_THROWS_AS(aut_closed_form(8), DomainError);
}

TEST_CASE("brute force at anchor points") {
  CHECK(aut_bruteforce(34).order() == 1);
  CHECK(aut_bruteforce(51).swaps == std::vector<std::pair<Vertex, Vertex>>{{17, 51}});
  CHECK(aut_bruteforce(13).order() == 2);
  CHECK(aut_bruteforce(13).swaps == std::vector<std::pair<Vertex, Vertex>>{{4, 12}});
  CHECK(aut_bruteforce(1).order() == 1);
  CHECK(aut_bruteforce(2).order() == 2);
  CHECK_THROWS_AS(aut_bruteforce(kAutBruteforceCap + 1), RangeError);
}

TEST_CASE("oracle agreement") {
  for (std::uint64_t n = 9; n <= 200; ++n) CHECK(aut_bruteforce(n) == aut_closed_form(n));
}

TEST_CASE("interval table") {
  std::ifstream f(std::string(FIBSUM_GOLDEN_DIR) + "/aut_trivial_intervals.csv");
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> golden;
  std::uint64_t lo, hi;
  char comma;
  while (f >> lo >> comma >> hi) golden.push_back({lo, hi});
  REQUIRE(golden.size() == 8);

  const auto rows = interval_report(2278);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> trivial;
  for (const auto& r : rows) {
    CHECK((r.order == 1 || r.order == 2));
    if (r.order == 1) trivial.push_back({r.lo, r.hi});
  }
  CHECK(trivial == golden);
  CHECK(rows.front().lo == 7);
  CHECK(rows.back().hi == 2278);

  // Truncation at an interior point leaves the last run open at the edge.
  const auto partial = interval_report(143);
  CHECK(partial.back() == IntervalRow{127, 143, 1});
}

TEST_CASE("swapped pairs preserve edges and share neighborhoods") {
  for (std::uint64_t n = 9; n <= 500; ++n) {
    const auto group = aut_closed_form(n);
    if (group.swaps.empty()) continue;
    CHECK(involution_preserves_edges(n, group.swaps));
  }
  // Spot the stated neighbor identity: in G_60, 17 and 51 both see {4, 38}.
  const FibSumGraph g(60);
  CHECK(g.neighbors(17) == std::vector<Vertex>{4, 38});
  CHECK(g.neighbors(51) == std::vector<Vertex>{4, 38});
}

TEST_CASE("group order is 1 or 2 everywhere; at most two pairs from 34 up") {
  for (std::uint64_t n = 9; n <= 2278; ++n) {
    const auto group = aut_closed_form(n);
    CHECK((group.order() == 1 || group.order() == 2));
    // The closed-form intervals move at most two pairs; below 34 larger
    // involutions occur (the 11-vertex graph swaps five pairs).
    if (n >= 34) CHECK(group.swaps.size() <= 2);
  }
  CHECK(aut_bruteforce(11).swaps.size() == 5);
}

TEST_CASE("automorphisms map Hamiltonian endpoints to endpoints") {
  for (std::uint64_t n : {13ull, 34ull}) {
    const auto group = n >= 9 ? aut_closed_form(n) : aut_bruteforce(n);
    const auto paths = enumerate_paths_bruteforce(n);
    std::vector<Vertex> image(n + 1);
    for (Vertex v = 1; v <= n; ++v) image[v] = v;
    for (const auto& [a, b] : group.swaps) {
      image[a] = b;
      image[b] = a;
    }
    for (const auto& p : paths) {
      HamiltonPath mapped;
      for (Vertex v : p) mapped.push_back(image[v]);
      CHECK(is_hamilton_path(n, mapped));
    }
  }
}

TEST_CASE("agreement sweep") {
  const auto bad = suites::automorphism_agreement(250);
  CHECK_MESSAGE(!bad.has_value(), bad.value_or(""));
}
