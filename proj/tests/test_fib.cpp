#include <doctest.h>

#include "fibsum/fib.hpp"
#include "fibsum/verify.hpp"

using namespace fibsum;

TEST_CASE("fib values") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(9) == 34);
  CHECK(fib(19) == 4181);
  CHECK(fib(kFibMaxIndex) > fib(kFibMaxIndex - 1));
  CHECK_THROWS_AS(fib(kFibMaxIndex + 1), RangeError);
  CHECK_THROWS_AS(fib(-1), DomainError);
}

TEST_CASE("bracket") {
  CHECK(bracket(1) == 2);
  CHECK(bracket(34) == 9);
  CHECK(bracket(18) == 7);  // fib(7)=13 <= 18 < 21=fib(8)
  CHECK_THROWS_AS(bracket(0), DomainError);
  // brute scan agreement over a window
  for (std::uint64_t x = 1; x <= 20000; ++x) {
    const int k = bracket(x);
    CHECK(fib(k) <= x);
    CHECK(x < fib(k + 1));
    CHECK(k >= 2);
  }
}

TEST_CASE("is_fibonacci") {
  CHECK(is_fibonacci(0));
  CHECK(is_fibonacci(1));
  CHECK(is_fibonacci(34));
  CHECK_FALSE(is_fibonacci(35));
  CHECK_FALSE(is_fibonacci(4));
  CHECK(is_fibonacci(fib(50)));
}

TEST_CASE("zeckendorf") {
  CHECK(zeckendorf(1) == std::vector<int>{2});
  CHECK(zeckendorf(17) == std::vector<int>{7, 4, 2});     // 13 + 3 + 1
  CHECK(zeckendorf(7164) == std::vector<int>{20, 14, 8, 2});  // 6765 + 377 + 21 + 1
  CHECK_THROWS_AS(zeckendorf(0), DomainError);
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto z = zeckendorf(n);
    CHECK(fib_index_sum(z) == n);
    for (std::size_t i = 0; i + 1 < z.size(); ++i) CHECK(z[i] - z[i + 1] >= 2);
  }
}

TEST_CASE("arithmetic facts suite") {
  const auto bad = suites::fib_facts();
  CHECK_MESSAGE(!bad.has_value(), bad.value_or(""));
}

TEST_CASE("checked addition") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(~0ull, 1), RangeError);
}
