#include <doctest.h>

#include <numeric>
#include <vector>

#include "gen.hpp"
#include "rsum/witness.hpp"
#include "seed.hpp"

using namespace rsum;
using rsum::testing::Gen;

namespace {

using I = std::vector<std::int64_t>;

I random_k(Gen& g, std::size_t n, std::uint32_t p) {
  I k;
  for (std::size_t i = 0; i < n; ++i) k.push_back(g.range(0, p - 1));
  return k;
}

}  // namespace

TEST_CASE("delta indicator invariant under scaling and permutation") {
  Gen g(testing::base_seed() + 31);
  for (int t = 0; t < 500; ++t) {
    const PrimeModulus mod(g.prime(13));
    const auto n = static_cast<std::size_t>(g.range(1, 6));
    auto a = g.coeffs(mod, n);
    if (g.coin()) {
      // Bias towards {a, -a} supports.
      std::vector<Residue> v;
      const auto u = a[0];
      for (std::size_t i = 0; i < n; ++i) v.push_back(g.coin() ? u : mod.neg(u));
      a = CoefficientVector(mod, v);
    }
    const auto c = static_cast<Residue>(g.range(1, mod.value() - 1));
    std::vector<Residue> b(a.values().begin(), a.values().end());
    for (auto& x : b) x = mod.mul(c, x);
    std::shuffle(b.begin(), b.end(), g.engine());
    CHECK(delta_indicator(a).delta == delta_indicator(CoefficientVector(mod, b)).delta);
  }
}

TEST_CASE("pairing permutation meets its predicate") {
  Gen g(testing::base_seed() + 32);
  for (int t = 0; t < 500; ++t) {
    const PrimeModulus mod(g.prime(13));
    const auto n = static_cast<std::size_t>(g.range(1, 8));
    if (mod.value() == 2) {
      if (n >= 2) CHECK_THROWS_AS(pairing_permutation(CoefficientVector::ones(mod, n)), PreconditionError);
      continue;
    }
    std::vector<Residue> v;
    const auto u = static_cast<Residue>(g.range(1, mod.value() - 1));
    for (std::size_t i = 0; i < n; ++i)
      v.push_back(g.coin() ? (g.coin() ? u : mod.neg(u)) : static_cast<Residue>(g.range(1, mod.value() - 1)));
    const CoefficientVector a(mod, v);
    const auto s = pairing_permutation(a);
    CHECK(s.is_valid());
    CHECK(pairing_ok(a, s));
  }
}

TEST_CASE("two-variable alternating sum closed form") {
  Gen g(testing::base_seed() + 33);
  for (int t = 0; t < 500; ++t) {
    const PrimeModulus mod(g.prime(31));
    const auto a = g.coeffs(mod, 2);
    const I k{g.range(0, 40), g.range(0, 40)}, x{g.range(0, 40), g.range(0, 40)};
    const auto want = mod.sub(mod.mul(a[1], mod.reduce(k[1] - x[1])), mod.mul(a[0], mod.reduce(k[0] - x[0])));
    CHECK(f_eval(k, a, x) == want);
  }
}

TEST_CASE("returned witnesses are valid") {
  Gen g(testing::base_seed() + 34);
  int found = 0;
  for (int t = 0; t < 400; ++t) {
    const auto n = static_cast<std::size_t>(g.range(1, 4));
    const PrimeModulus mod(g.prime(13));
    if (mod.value() == 2 || mod.value() < 2 * n - 2) continue;
    const auto a = g.coeffs(mod, n);
    const auto k = random_k(g, n, mod.value());
    if (classify_witness_case(k, a) == WitnessCase::none) continue;
    const auto m = find_witness(k, a);
    ++found;
    CHECK(std::accumulate(m.begin(), m.end(), std::int64_t{0}) ==
          static_cast<std::int64_t>(n * (n - 1) / 2));
    for (auto mi : m) CHECK(mi <= std::max<std::int64_t>(2 * static_cast<std::int64_t>(n) - 3, 0));
    CHECK(f_eval(k, a, m) != 0);
  }
  CHECK(found > 100);
}

TEST_CASE("nonvanishing point exists when a top coefficient fits") {
  Gen g(testing::base_seed() + 35);
  for (int t = 0; t < 300; ++t) {
    const PrimeModulus mod(g.prime(13));
    const auto n = static_cast<std::size_t>(g.range(1, 3));
    const auto P = g.poly(mod, n, 4);
    const auto A = g.family(mod, n);
    const auto sizes = A.sizes();
    const auto e = nullstellensatz_exponent(P, sizes);
    const auto pt = cn_witness_search(P, A);
    if (e) {
      REQUIRE(pt.has_value());
    }
    if (pt) CHECK(P.evaluate(*pt) != 0);
  }
}

TEST_CASE("polynomial certificate sides agree") {
  Gen g(testing::base_seed() + 36);
  for (int t = 0; t < 200; ++t) {
    const PrimeModulus mod(g.coin() ? 11 : 13);
    const auto n = static_cast<std::size_t>(g.range(1, 3));
    const auto P = g.poly(mod, n, 3);
    if (P.is_zero()) continue;
    const auto d = P.total_degree();
    I m;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      m.push_back(g.range(0, 3));
      total += m.back();
    }
    if (total < d) m[0] += d - total;
    CHECK(certificate_polynomial_sum(P, m).equal());
  }
}
