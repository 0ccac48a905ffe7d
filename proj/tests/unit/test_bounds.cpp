#include <doctest.h>

#include <vector>

#include "rsum/bounds.hpp"

using namespace rsum;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> x) { return x; }

}  // namespace

TEST_CASE("classical bounds") {
  CHECK(classical_bound(ClassicalKind::cauchy_davenport, 5, v({2, 2}), 2) == 3);
  CHECK(classical_bound(ClassicalKind::dh, 7, v({4}), 2) == 5);
  CHECK(classical_bound(ClassicalKind::anr, 13, v({1, 2, 3}), 3) == 1);
  CHECK_THROWS(classical_bound(ClassicalKind::anr, 13, v({2, 2}), 2));
  CHECK_THROWS(classical_bound(ClassicalKind::cauchy_davenport, 5, v({0, 2}), 2));
}

TEST_CASE("distinct linear-form bounds") {
  const std::vector<Residue> opp{1, 12};
  CHECK(linear_restricted_bound(LinearKind::conj_1_1, 13, 2, v({5}), opp) == 7);
  const std::vector<Residue> a3{1, 2, 3};
  CHECK(linear_restricted_bound(LinearKind::thm_1_2, 11, 3, v({4, 4, 4}), a3) == 4);
  CHECK(linear_restricted_bound(LinearKind::eq_1_8, 7, 3, v({4}), a3) == 4);
  CHECK_THROWS(linear_restricted_bound(LinearKind::thm_1_2, 11, 0, v({}), std::vector<Residue>{}));
}

TEST_CASE("penalty indicators") {
  CHECK(opposite_pair_penalty(std::vector<Residue>{1, 12}, 13));
  CHECK_FALSE(opposite_pair_penalty(std::vector<Residue>{1, 1}, 13));
  CHECK_FALSE(opposite_pair_penalty(std::vector<Residue>{1, 12, 1}, 13));
  CHECK(equal_pair_penalty(std::vector<Residue>{3, 3}));
  CHECK_FALSE(equal_pair_penalty(std::vector<Residue>{3, 4}));
}

TEST_CASE("restricted-sumset bounds through evaluate_bound") {
  BoundInput in;
  in.p = 11;
  in.n = 3;
  in.sizes = {3, 3, 3};
  in.deg_p = 2;
  in.top_exponents = std::vector<std::int64_t>{1, 1, 0};
  CHECK(evaluate_bound(TheoremId::thm1_3, in) == 3);

  BoundInput d;
  d.p = 13;
  d.n = 2;
  d.sizes = {5, 5};
  d.m = 1;
  CHECK(evaluate_bound(TheoremId::cor1_2d, d) == 7);

  BoundInput c;
  c.p = 13;
  c.n = 2;
  c.sizes = {4, 4};
  c.m_i = {1, 1};
  CHECK(evaluate_bound(TheoremId::cor1_3, c) == 3);
}

TEST_CASE("value-set bounds") {
  BoundInput in;
  in.p = 7;
  in.n = 2;
  in.sizes = {3, 3};
  in.k = 2;
  in.coeffs = {1, 1};
  CHECK(evaluate_bound(TheoremId::thm5_1i, in) == 3);

  BoundInput c;
  c.p = 13;
  c.n = 2;
  c.sizes = {5, 5};
  c.k = 2;
  c.coeffs = {1, 1};
  CHECK(evaluate_bound(TheoremId::conj5_2, c) == 4);
}

TEST_CASE("delta and the floor-sum identity") {
  CHECK(delta_nk(4, 2) == 2);
  CHECK(delta_nk_direct(4, 2) == 2);
  CHECK(delta_nk(3, 5) == 0);
  CHECK(delta_nk(5, 1) == 10);
  CHECK(lemma_5_1_sides(7, 4, 2) == std::pair<std::int64_t, std::int64_t>{8, 8});
  CHECK(lemma_5_1_sides(0, 1, 1) == std::pair<std::int64_t, std::int64_t>{-1, -1});
  for (std::int64_t n = 1; n <= 6; ++n)
    for (std::int64_t k = 1; k <= 6; ++k) {
      const auto s = lemma_5_1_sides(n, n, k);
      CHECK(s.first == delta_nk(n, k));
      CHECK(s.second == delta_nk(n, k));
    }
  CHECK(r_kmn(2, 7, 4) == 0);
  CHECK(r_kmn(3, 4, 5) == 1);
  CHECK(r_kmn(1, 9, 4) == 0);
}

TEST_CASE("full coverage threshold") {
  CHECK(full_coverage_min_size(11) == 7);
  CHECK(full_coverage_min_size(13) == 7);
  CHECK(full_coverage_min_size(2) == 1);
}

TEST_CASE("theorem ids round-trip") {
  for (auto id : all_theorems()) CHECK(parse_theorem_id(to_string(id)) == id);
  CHECK_THROWS(parse_theorem_id("thm9"));
  CHECK(is_conjecture(TheoremId::conj1_1));
  CHECK_FALSE(is_conjecture(TheoremId::thm1_2));
}

TEST_CASE("vacuous bounds are reported, not clamped") {
  BoundInput in;
  in.p = 7;
  in.n = 3;
  in.sizes = {2, 2, 2};
  in.k = 1;
  in.coeffs = {1, 1, 1};
  const auto r = make_report(TheoremId::thm5_1ii, in, 3, "distinct");
  CHECK(r.status == BoundStatus::vacuous);
  CHECK_FALSE(r.slack().has_value());

  BoundInput d;
  d.p = 7;
  d.n = 2;
  d.sizes = {4, 4};
  const auto ok = make_report(TheoremId::dh, d, 5, "distinct");
  CHECK(ok.status == BoundStatus::holds);
  CHECK(ok.slack() == 0);
  const auto bad = make_report(TheoremId::dh, d, 4, "distinct");
  CHECK(bad.status == BoundStatus::violated);
}
