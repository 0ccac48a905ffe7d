#include <doctest.h>

#include <sstream>

#include "rsum/poly.hpp"

using namespace rsum;

namespace {

IntPolynomial ivar(std::size_t n, std::size_t i) { return IntPolynomial::variable(IntegerRing{}, n, i); }

}  // namespace

TEST_CASE("multiply over the integers and mod 2") {
  const auto x1 = ivar(2, 0), x2 = ivar(2, 1);
  const auto sq = (x1 - x2) * (x1 + x2);
  CHECK(sq.term_count() == 2);
  CHECK(sq.coefficient({2, 0}) == 1);
  CHECK(sq.coefficient({0, 2}) == -1);

  const ModRing f2(PrimeModulus(2));
  const auto y1 = ModPolynomial::variable(f2, 2, 0), y2 = ModPolynomial::variable(f2, 2, 1);
  const auto s = power(y1 + y2, 2);
  CHECK(s.term_count() == 2);
  CHECK(s.coefficient({1, 1}) == 0);

  const auto one = IntPolynomial::constant(IntegerRing{}, 2, 1);
  CHECK(sq * one == sq);
}

TEST_CASE("coefficient lookup") {
  const ModRing f7(PrimeModulus(7));
  ModPolynomial P(f7, 2);
  P.add_term({2, 1}, 1);
  P.add_term({0, 0}, 3);
  CHECK(P.coefficient({1, 1}) == 0);
  CHECK_THROWS_AS(P.coefficient({1, 1, 1}), ArityMismatch);

  const auto d = power(ivar(2, 0) - ivar(2, 1), 2);
  CHECK(d.coefficient({1, 1}) == -2);

  const auto vdm = difference_product(3, 1, IntegerRing{});
  CHECK(vdm.coefficient({0, 1, 2}) == 1);
  CHECK(vdm.total_degree() == 3);
}

TEST_CASE("total degree and top part") {
  IntPolynomial zero(IntegerRing{}, 3);
  CHECK(zero.total_degree() == -1);
  auto P = ivar(2, 0) * ivar(2, 0) * ivar(2, 1) + ivar(2, 0) * ivar(2, 1);
  P.add_term({0, 0}, 3);
  CHECK(P.total_degree() == 3);
  const auto top = P.top_degree_part();
  CHECK(top.term_count() == 1);
  CHECK(top.coefficient({2, 1}) == 1);
}

TEST_CASE("pstar transform") {
  auto P = ivar(2, 0) * ivar(2, 0) * ivar(2, 1) + ivar(2, 0) * ivar(2, 1);
  P.add_term({0, 0}, 3);
  const auto Ps = pstar_transform(P);
  CHECK(Ps.term_count() == 2);
  CHECK(Ps.coefficient({2, 1}) == 1);
  CHECK(Ps.coefficient({1, 1}) == -1);

  const auto lin = ivar(3, 0) + ivar(3, 2).scaled(5);
  CHECK(pstar_transform(lin) == lin);

  const ModRing f5(PrimeModulus(5));
  const auto x = ModPolynomial::variable(f5, 1, 0);
  const auto q = pstar_transform(x * x);
  CHECK(q.coefficient(ExponentVector{2}) == 1);
  CHECK(q.coefficient(ExponentVector{1}) == 4);

  CHECK_THROWS(pstar_transform(IntPolynomial(IntegerRing{}, 2)));
}

TEST_CASE("difference product orientation") {
  const auto d = difference_product(2, 1, IntegerRing{});
  CHECK(d.coefficient({0, 1}) == 1);
  CHECK(d.coefficient({1, 0}) == -1);
  // (x2 - x1)^3: x1 x2^2 carries -3 and x1^2 x2 carries +3.
  const auto c = difference_product(2, 3, IntegerRing{});
  CHECK(c.coefficient({1, 2}) == -3);
  CHECK(c.coefficient({2, 1}) == 3);
  CHECK_THROWS(difference_product(1, 1, IntegerRing{}));
}

TEST_CASE("falling factorial polynomial") {
  const auto f = falling_factorial_poly(IntegerRing{}, 1, 0, 3);
  CHECK(f.coefficient(ExponentVector{3}) == 1);
  CHECK(f.coefficient(ExponentVector{2}) == -3);
  CHECK(f.coefficient(ExponentVector{1}) == 2);
}

TEST_CASE("term cap") {
  const auto s = linear_sum(IntegerRing{}, 4);
  CHECK_THROWS_AS(power(s, 10, 100), ExpansionLimitExceeded);
  CHECK_NOTHROW(power(s, 3, 100));
}

TEST_CASE("reduce to Z/pZ") {
  IntPolynomial P(IntegerRing{}, 2);
  P.add_term({1, 0}, 14);
  P.add_term({0, 1}, -1);
  const auto r = reduce(P, PrimeModulus(7));
  CHECK(r.term_count() == 1);
  CHECK(r.coefficient({0, 1}) == 6);
}

TEST_CASE("text format round trip") {
  const auto P = parse_mod_polynomial("# restriction\narity 2 mod 7\n1 2 1\n3 0 0\n\n4 2 1\n");
  CHECK(P.coefficient({2, 1}) == 5);
  CHECK(P.coefficient({0, 0}) == 3);
  std::ostringstream out;
  write_polynomial(out, P);
  CHECK(parse_mod_polynomial(out.str()) == P);

  const auto any = parse_polynomial("mod 0 arity 1\n-12345678901234567890 3\n");
  REQUIRE(std::holds_alternative<IntPolynomial>(any));
  CHECK(std::get<IntPolynomial>(any).coefficient(ExponentVector{3}) == BigInt("-12345678901234567890"));

  CHECK_THROWS(parse_mod_polynomial("arity 2 mod 7\n1 2\n"));
  CHECK_THROWS(parse_mod_polynomial("arity 2 mod 8\n1 0 0\n"));
  CHECK_THROWS(parse_mod_polynomial("1 0 0\n"));
  CHECK_THROWS(parse_mod_polynomial("arity 1 mod 0\n1 0\n"));
}

TEST_CASE("human-readable form") {
  const auto P = parse_mod_polynomial("arity 2 mod 7\n1 2 1\n3 1 0\n4 0 0\n");
  const auto s = to_string(P);
  CHECK(s.find("x1^2*x2") != std::string::npos);
  CHECK(s.find("3*x1") != std::string::npos);
}
