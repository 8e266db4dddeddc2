#include <map>

#include "bayesext/cantor.hpp"
#include "bayesext/error.hpp"
#include "doctest.h"

using namespace bayesext;

TEST_SUITE("cantor") {
  TEST_CASE("examples") {
    CHECK(cantor_pair(0, 0) == 0);
    CHECK(cantor_pair(1, 1) == 4);
    CHECK(cantor_unpair(4) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    for (std::uint64_t i = 0; i < 200; ++i)
      for (std::uint64_t j = 0; j < 200; ++j) CHECK(cantor_unpair(cantor_pair(i, j)) == std::pair{i, j});
  }

  TEST_CASE("agrees with a walk along the diagonals") {
    // Diagonal w = i + j is walked with i increasing; each visit takes the next number.
    std::uint64_t n = 0;
    for (std::uint64_t w = 0; w < 300; ++w) {
      for (std::uint64_t i = 0; i <= w; ++i, ++n) {
        const std::uint64_t j = w - i;
        REQUIRE(cantor_pair(i, j) == n);
        REQUIRE(cantor_unpair(n) == std::pair{i, j});
        REQUIRE(cantor_first(n) <= n);
      }
    }
  }

  TEST_CASE("large values") {
    const std::uint64_t i = 3000000000ULL, j = 1234567ULL;
    CHECK(cantor_unpair(cantor_pair(i, j)) == std::pair{i, j});
    CHECK_THROWS_AS(cantor_pair(std::uint64_t{1} << 40, std::uint64_t{1} << 40), DomainError);
  }
}
