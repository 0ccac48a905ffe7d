#include "rsum/field.hpp"

#include <ostream>
#include <string>

namespace rsum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(0) {
  if (p >= kMax)
    throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  p_ = static_cast<Residue>(p);
}

Residue PrimeModulus::pow(Residue base, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t b = base % p_;
  while (e) {
    if (e & 1) result = result * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue PrimeModulus::inv(Residue a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

void FieldElement::check(const FieldElement& o) const {
  if (!(mod_ == o.mod_))
    throw ModulusMismatch("field elements mod " + std::to_string(mod_.value()) +
                          " and mod " + std::to_string(o.mod_.value()));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check(o);
  value_ = mod_.add(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check(o);
  value_ = mod_.sub(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check(o);
  value_ = mod_.mul(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check(o);
  value_ = mod_.mul(value_, mod_.inv(o.value_));
  return *this;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value() << " (mod " << e.modulus().value() << ")";
}

FieldElement falling_factorial(const FieldElement& x, std::uint64_t n) {
  const auto mod = x.modulus();
  auto result = FieldElement::one(mod);
  for (std::uint64_t j = 0; j < n; ++j) {
    result *= x - FieldElement(mod, static_cast<std::int64_t>(j % mod.value()));
    if (result.is_zero()) break;
  }
  return result;
}

BigInt falling_factorial(const BigInt& x, std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t j = 0; j < n; ++j) result *= x - j;
  return result;
}

FieldElement factorial(std::uint64_t n, PrimeModulus mod) {
  if (n >= mod.value())
    throw std::domain_error(std::to_string(n) + "! vanishes mod " +
                            std::to_string(mod.value()));
  auto result = FieldElement::one(mod);
  for (std::uint64_t j = 2; j <= n; ++j)
    result *= FieldElement(mod, static_cast<std::int64_t>(j));
  return result;
}

BigInt factorial_exact(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t j = 2; j <= n; ++j) result *= j;
  return result;
}

std::int64_t least_residue(std::int64_t m, std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("least_residue: modulus must be positive");
  auto r = m % k;
  return r < 0 ? r + k : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  auto q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace rsum
