#include <doctest.h>

#include "rsum/field.hpp"

using namespace rsum;

TEST_CASE("prime modulus rejects composites and out-of-range values") {
  CHECK_THROWS(PrimeModulus(1));
  CHECK_THROWS(PrimeModulus(9));
  CHECK_THROWS(PrimeModulus(PrimeModulus::kMax + 11));
  CHECK_NOTHROW(PrimeModulus(2));
  CHECK_NOTHROW(PrimeModulus(2147483647));
}

TEST_CASE("modular arithmetic near the 31-bit limit") {
  const PrimeModulus mod(2147483647);
  CHECK(mod.mul(2147483646, 2147483646) == 1);
  CHECK(mod.add(2147483646, 5) == 4);
  CHECK(mod.sub(3, 5) == 2147483645);
  CHECK(mod.mul(mod.inv(123456789), 123456789) == 1);
  CHECK(mod.reduce(-1) == 2147483646);
}

TEST_CASE("field elements") {
  const PrimeModulus p7(7), p5(5);
  FieldElement a(p7, 3), b(p7, -2);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a / b * b) == a);
  CHECK((-a).value() == 4);
  CHECK(a.inverse().value() == 5);
  CHECK_THROWS_AS(a + FieldElement(p5, 1), ModulusMismatch);
  CHECK_THROWS(FieldElement::zero(p7).inverse());
}

TEST_CASE("falling factorial") {
  const PrimeModulus p7(7);
  CHECK(falling_factorial(FieldElement(p7, 4), 0).value() == 1);
  CHECK(falling_factorial(FieldElement(p7, 5), 3).value() == 4);
  CHECK(falling_factorial(BigInt(2), 4) == 0);
  CHECK(falling_factorial(BigInt(-3), 2) == 12);
  CHECK(falling_factorial(BigInt(10), 3) == 720);
}

TEST_CASE("factorial") {
  const PrimeModulus p11(11);
  CHECK(factorial(0, p11).value() == 1);
  CHECK(factorial(5, p11).value() == 10);
  CHECK_THROWS(factorial(11, p11));
  CHECK(factorial_exact(20) == BigInt("2432902008176640000"));
  CHECK(factorial_exact(25) == BigInt("15511210043330985984000000"));
}

TEST_CASE("least residue and floor division") {
  CHECK(least_residue(7, 2) == 1);
  CHECK(least_residue(-3, 5) == 2);
  CHECK(least_residue(12, 4) == 0);
  CHECK_THROWS(least_residue(1, 0));
  CHECK(floor_div(-1, 2) == -1);
  CHECK(floor_div(-4, 2) == -2);
  CHECK(floor_div(7, 3) == 2);
  CHECK_THROWS(floor_div(1, -1));
}
