#pragma once

// Exact arithmetic in Z/pZ plus the integer helpers (floor division, least
// residues, falling factorials) that the bound formulas are written in.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace rsum {

using BigInt = boost::multiprecision::cpp_int;
using Residue = std::uint32_t;

class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// A prime p with 2 <= p < 2^31, so that products of two residues fit in
/// 64 bits. Construction rejects composites.
class PrimeModulus {
 public:
  static constexpr std::uint64_t kMax = (std::uint64_t{1} << 31);

  explicit PrimeModulus(std::uint64_t p);

  Residue value() const { return p_; }

  Residue reduce(std::int64_t x) const {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }
  Residue pow(Residue base, std::uint64_t e) const;
  /// x^(p-2); throws std::domain_error on zero.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  Residue p_;
};

class FieldElement {
 public:
  FieldElement(PrimeModulus mod, std::int64_t value)
      : mod_(mod), value_(mod.reduce(value)) {}

  static FieldElement zero(PrimeModulus mod) { return {mod, 0}; }
  static FieldElement one(PrimeModulus mod) { return {mod, 1}; }

  Residue value() const { return value_; }
  PrimeModulus modulus() const { return mod_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator-() const { return raw(mod_, mod_.neg(value_)); }
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement pow(std::uint64_t e) const { return raw(mod_, mod_.pow(value_, e)); }
  FieldElement inverse() const { return raw(mod_, mod_.inv(value_)); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  static FieldElement raw(PrimeModulus mod, Residue v) {
    FieldElement e(mod, 0);
    e.value_ = v;
    return e;
  }
  void check(const FieldElement& o) const;

  PrimeModulus mod_;
  Residue value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

/// (x)_n = x(x-1)...(x-n+1); (x)_0 = 1.
FieldElement falling_factorial(const FieldElement& x, std::uint64_t n);
BigInt falling_factorial(const BigInt& x, std::uint64_t n);

/// n! in Z/pZ. Requires n < p (so the result is nonzero).
FieldElement factorial(std::uint64_t n, PrimeModulus mod);

BigInt factorial_exact(std::uint64_t n);

/// {m}_k: the least nonnegative residue of m modulo k >= 1.
std::int64_t least_residue(std::int64_t m, std::int64_t k);

/// floor(a / b) for b > 0, correct for negative a.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace rsum
