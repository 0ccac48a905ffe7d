#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gen.hpp"
#include "rsum/dyson.hpp"
#include "seed.hpp"

using namespace rsum;
using rsum::testing::Gen;

TEST_CASE("modular expansion matches the reduced exact value") {
  Gen g(testing::base_seed() + 41);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(g.range(1, 3));
    std::vector<std::uint32_t> m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(static_cast<std::uint32_t>(g.range(0, 2)));
    const PrimeModulus mod(g.prime(31));
    const BigInt exact = dyson_coefficient(m);
    BigInt r = exact % mod.value();
    if (r < 0) r += mod.value();
    CHECK(dyson_coefficient_mod(m, mod) == static_cast<Residue>(r));
  }
}

TEST_CASE("closed form magnitude is symmetric in m") {
  Gen g(testing::base_seed() + 42);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(g.range(2, 4));
    std::vector<std::uint32_t> m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(static_cast<std::uint32_t>(g.range(0, 2)));
    auto q = m;
    std::shuffle(q.begin(), q.end(), g.engine());
    const BigInt a = dyson_coefficient(m), b = dyson_coefficient(q);
    CHECK(abs(a) == abs(b));
    CHECK(a == dyson_closed_form(m));
  }
}
