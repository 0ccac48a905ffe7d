#include <doctest.h>

#include <vector>

#include "rsum/dyson.hpp"

using namespace rsum;

TEST_CASE("dyson coefficients") {
  using M = std::vector<std::uint32_t>;
  CHECK(dyson_coefficient(M{1, 1}) == -2);
  CHECK(dyson_closed_form(M{1, 1}) == -2);
  CHECK(dyson_coefficient(M{0, 0, 0}) == 1);
  CHECK(dyson_coefficient(M{1, 1, 1}) == -6);
  CHECK(dyson_closed_form(M{1, 1, 1}) == -6);
  CHECK(dyson_coefficient(M{2, 1, 0}) == dyson_closed_form(M{2, 1, 0}));
  CHECK(dyson_coefficient_mod(M{1, 1, 1}, PrimeModulus(7)) == 1);
  CHECK_THROWS_AS(dyson_coefficient(M{3, 3, 3, 3}, 100), ExpansionLimitExceeded);
}

TEST_CASE("difference-product constant terms") {
  CHECK(sy_coefficient(3, 1) == 1);
  CHECK(sy_coefficient(1, 4) == 1);
  CHECK(sy_coefficient(2, 2) == -3);
  CHECK(sy_closed_form(2, 2) == -3);
  CHECK(sy_coefficient(3, 2) == sy_closed_form(3, 2));
}
