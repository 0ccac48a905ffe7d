#include <doctest.h>

#include <numeric>

#include "rsum/witness.hpp"

using namespace rsum;

namespace {

using I = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("delta indicator") {
  const PrimeModulus p5(5), p7(7);
  const auto d = delta_indicator(CoefficientVector(p5, {1, 4}));
  CHECK(d.delta == 1);
  REQUIRE(d.counts.has_value());
  CHECK(d.counts->first == 1);
  CHECK(d.counts->second == 1);
  CHECK(delta_indicator(CoefficientVector(p5, {1, 1})).delta == 0);
  CHECK(delta_indicator(CoefficientVector(p7, {1, 6, 1, 6})).delta == 0);
  CHECK(delta_indicator(CoefficientVector(p7, {1, 6, 6, 6})).delta == 1);
}

TEST_CASE("pairing permutation") {
  const PrimeModulus p5(5);
  for (auto a : {CoefficientVector(p5, {1, 1}), CoefficientVector(p5, {1, 4}),
                 CoefficientVector(p5, {1, 4, 1}), CoefficientVector(p5, {1, 4, 4, 1, 2})}) {
    const auto s = pairing_permutation(a);
    CHECK(s.is_valid());
    CHECK(pairing_ok(a, s));
  }
  const CoefficientVector bad(p5, {1, 4, 1});
  Permutation id = Permutation::identity(3);
  CHECK_FALSE(pairing_ok(bad, id));
}

TEST_CASE("permutation sign") {
  CHECK(Permutation::identity(4).sign() == 1);
  CHECK(Permutation{{1, 0, 2}}.sign() == -1);
  CHECK(Permutation{{1, 2, 0}}.sign() == 1);
  CHECK_FALSE(Permutation{{0, 0}}.is_valid());
}

TEST_CASE("alternating evaluation") {
  const PrimeModulus p5(5);
  CHECK(f_eval(I{1, 1}, CoefficientVector(p5, {1, 2}), I{0, 1}) == 4);
  CHECK(f_eval(I{3}, CoefficientVector(p5, {2}), I{1}) == 1);
  // Exact value -480; the printed constant -3600 agrees with it mod 13 only.
  for (std::uint32_t p : {11U, 13U, 17U, 101U}) {
    const PrimeModulus mod(p);
    const auto v = f_eval(I{5, 5, 5, p - 4}, CoefficientVector(mod, {1, 1, 1, p - 1}), I{0, 2, 3, 1});
    CHECK(v == mod.reduce(-480));
    CHECK(v != 0);
  }
}

TEST_CASE("witness search") {
  const PrimeModulus p7(7), p11(11), p13(13);
  CHECK(find_witness(I{4}, CoefficientVector(p7, {3})) == I{0});

  const auto m = find_witness(I{3, 3}, CoefficientVector(p7, {1, 1}));
  CHECK(m[0] + m[1] == 1);
  CHECK(witness_ok(I{3, 3}, CoefficientVector(p7, {1, 1}), m));

  const CoefficientVector ex(p11, {1, 1, 1, 10});
  CHECK(classify_witness_case(I{5, 5, 5, 7}, ex) == WitnessCase::exceptional);
  CHECK(witness_ok(I{5, 5, 5, 7}, ex, I{0, 2, 3, 1}));
  const auto w = find_witness(I{5, 5, 5, 7}, ex);
  CHECK(std::accumulate(w.begin(), w.end(), std::int64_t{0}) == 6);
  CHECK(witness_ok(I{5, 5, 5, 7}, ex, w));

  CHECK(std::holds_alternative<ExceptionalCase>(lemma_2_3_classify(I{5, 5, 5, 7}, ex)));
  const auto r = lemma_2_3_classify(I{5, 5, 5, 8}, CoefficientVector(p13, {1, 1, 1, 12}));
  REQUIRE(std::holds_alternative<CancelingPair>(r));
  const auto pr = std::get<CancelingPair>(r);
  CHECK(pr.s == 0);
  CHECK(pr.t == 3);

  CHECK_THROWS_AS(find_witness(I{3, 3}, CoefficientVector(PrimeModulus(2), {1, 1})), PreconditionError);
  CHECK_THROWS_AS(find_witness(I{1, 1, 1, 1}, CoefficientVector(PrimeModulus(5), {1, 1, 1, 1})),
                  PreconditionError);
}

TEST_CASE("grid search for a nonvanishing point") {
  const PrimeModulus p5(5);
  const ModRing R(p5);
  const auto x1 = ModPolynomial::variable(R, 2, 0), x2 = ModPolynomial::variable(R, 2, 1);
  const auto A = SetFamily::common(p5, {0, 1}, 2);
  const auto pt = cn_witness_search(x1 - x2, A);
  REQUIRE(pt.has_value());
  CHECK((*pt)[0] != (*pt)[1]);

  auto van = x1 * (x1 - ModPolynomial::constant(R, 2, 1));
  CHECK_FALSE(cn_witness_search(van, A).has_value());
  const std::vector<std::size_t> sz{2, 2};
  CHECK_FALSE(nullstellensatz_exponent(van, sz).has_value());

  const auto vdm = difference_product(3, 1, R);
  const SetFamily B(p5, {{0}, {0, 1}, {0, 1, 2}});
  const auto q = cn_witness_search(vdm, B);
  REQUIRE(q.has_value());
  CHECK((*q)[0] != (*q)[1]);
  CHECK((*q)[1] != (*q)[2]);
  CHECK((*q)[0] != (*q)[2]);
  const std::vector<std::size_t> sz3{1, 2, 3};
  CHECK(nullstellensatz_exponent(vdm, sz3).has_value());
}

TEST_CASE("coefficient certificates") {
  const PrimeModulus p7(7);
  ModPolynomial P(ModRing(p7), 2);
  P.add_term({1, 1}, 1);
  const auto c = certificate_polynomial_sum(P, I{2, 1});
  CHECK(c.lhs == 2);
  CHECK(c.rhs == 2);

  ModPolynomial H(ModRing(p7), 2);
  H.add_term({2, 1}, 3);
  H.add_term({0, 3}, 5);
  CHECK(certificate_polynomial_sum(H, I{2, 1}).equal());

  const PrimeModulus p11(11);
  const CoefficientVector a(p11, {1, 2});
  const std::vector<std::size_t> sizes{4, 4};
  const auto m = find_witness(I{3, 3}, CoefficientVector(p11, {1, 6}));
  const auto s = certificate_distinct_sum(sizes, a, m);
  CHECK(s.equal());
}
