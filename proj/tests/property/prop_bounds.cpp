#include <doctest.h>

#include <vector>

#include "gen.hpp"
#include "rsum/bounds.hpp"
#include "seed.hpp"

using namespace rsum;
using rsum::testing::Gen;

TEST_CASE("floor-sum identity and delta closed form") {
  Gen g(testing::base_seed() + 21);
  for (int t = 0; t < 2000; ++t) {
    const auto m = g.range(-100, 100), n = g.range(1, 12), k = g.range(1, 12);
    const auto [l, r] = lemma_5_1_sides(m, n, k);
    CHECK(l == r);
    CHECK(delta_nk(n, k) == delta_nk_direct(n, k));
  }
}

TEST_CASE("conjectured common-set bound agrees with the per-set theorem on equal sizes") {
  Gen g(testing::base_seed() + 22);
  for (int t = 0; t < 500; ++t) {
    const auto p = static_cast<std::int64_t>(g.prime(31));
    if (p < 5) continue;
    const auto n = static_cast<std::size_t>(g.range(2, 4));
    const auto m = g.range(2 * static_cast<std::int64_t>(n) - 2, p);
    if (p < static_cast<std::int64_t>((n - 1) * (n - 1))) continue;
    const PrimeModulus mod(static_cast<std::uint64_t>(p));
    const auto a = g.coeffs(mod, n);
    const std::vector<std::int64_t> one{m};
    const std::vector<std::int64_t> all(n, m);
    CHECK(linear_restricted_bound(LinearKind::conj_1_1, p, n, one, a.values()) ==
          linear_restricted_bound(LinearKind::thm_1_2, p, n, all, a.values()));
  }
}

TEST_CASE("penalty invariant under scaling and permutation") {
  Gen g(testing::base_seed() + 23);
  for (int t = 0; t < 500; ++t) {
    const PrimeModulus mod(g.prime(31));
    const auto n = static_cast<std::size_t>(g.range(1, 4));
    const auto a = g.coeffs(mod, n);
    const auto c = static_cast<Residue>(g.range(1, mod.value() - 1));
    std::vector<Residue> b(a.values().begin(), a.values().end());
    for (auto& x : b) x = mod.mul(c, x);
    std::shuffle(b.begin(), b.end(), g.engine());
    CHECK(opposite_pair_penalty(a.values(), mod.value()) == opposite_pair_penalty(b, mod.value()));
    CHECK(equal_pair_penalty(a.values()) == equal_pair_penalty(b));
  }
}

TEST_CASE("bounds never exceed p and are monotone in sizes") {
  Gen g(testing::base_seed() + 24);
  for (int t = 0; t < 500; ++t) {
    const auto p = static_cast<std::int64_t>(g.prime(31));
    const auto n = static_cast<std::size_t>(g.range(1, 4));
    std::vector<std::int64_t> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(g.range(1, p));
    const auto cd = classical_bound(ClassicalKind::cauchy_davenport, p, s, n);
    CHECK(cd <= p);
    auto bigger = s;
    if (bigger[0] < p) ++bigger[0];
    CHECK(classical_bound(ClassicalKind::cauchy_davenport, p, bigger, n) >= cd);
    const std::vector<std::int64_t> one{s[0]};
    CHECK(classical_bound(ClassicalKind::dh, p, one, n) <= p);
  }
}
