#pragma once

// Sparse multivariate polynomials over Z/pZ (ModRing) and over the exact
// integers (IntegerRing). Terms are kept in a lexicographically ordered map
// with no stored zero coefficients, so equal polynomials compare equal.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rsum/field.hpp"

namespace rsum {

class ExpansionLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultTermCap = 10'000'000;

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  ExponentVector(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  static ExponentVector zeros(std::size_t arity) {
    return ExponentVector(std::vector<std::uint32_t>(arity, 0));
  }

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> values() const { return exps_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  ExponentVector operator+(const ExponentVector& o) const {
    ExponentVector r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& e);

struct IntegerRing {
  using value_type = BigInt;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  std::uint32_t characteristic() const { return 0; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

class ModRing {
 public:
  using value_type = Residue;

  explicit ModRing(PrimeModulus mod) : mod_(mod) {}

  PrimeModulus modulus() const { return mod_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return mod_.reduce(v); }
  value_type add(value_type a, value_type b) const { return mod_.add(a, b); }
  value_type sub(value_type a, value_type b) const { return mod_.sub(a, b); }
  value_type mul(value_type a, value_type b) const { return mod_.mul(a, b); }
  value_type neg(value_type a) const { return mod_.neg(a); }
  bool is_zero(value_type a) const { return a == 0; }
  std::uint32_t characteristic() const { return mod_.value(); }

  friend bool operator==(const ModRing&, const ModRing&) = default;

 private:
  PrimeModulus mod_;
};

template <class Ring>
class SparsePolynomial {
 public:
  using Coeff = typename Ring::value_type;
  using TermMap = std::map<ExponentVector, Coeff>;

  SparsePolynomial(Ring ring, std::size_t arity) : ring_(std::move(ring)), arity_(arity) {
    if (arity == 0) throw ArityMismatch("polynomial arity must be at least 1");
  }

  static SparsePolynomial constant(Ring ring, std::size_t arity, Coeff c) {
    SparsePolynomial p(ring, arity);
    p.add_term(ExponentVector::zeros(arity), c);
    return p;
  }
  static SparsePolynomial variable(Ring ring, std::size_t arity, std::size_t index) {
    auto e = ExponentVector::zeros(arity);
    e[index] = 1;
    return monomial(ring, e, ring.one());
  }
  static SparsePolynomial monomial(Ring ring, const ExponentVector& e, Coeff c) {
    SparsePolynomial p(ring, e.arity());
    p.add_term(e, c);
    return p;
  }

  const Ring& ring() const { return ring_; }
  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// -1 for the zero polynomial.
  std::int64_t total_degree() const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max<std::int64_t>(d, e.total_degree());
    return d;
  }

  Coeff coefficient(const ExponentVector& e) const {
    check_arity(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  /// Adds c * x^e, merging with an existing term.
  void add_term(const ExponentVector& e, const Coeff& c) {
    check_arity(e);
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePolynomial operator-() const {
    SparsePolynomial r(ring_, arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.neg(c));
    return r;
  }
  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, ring_.neg(c));
    return *this;
  }
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    return multiply(a, b);
  }

  SparsePolynomial scaled(const Coeff& s) const {
    SparsePolynomial r(ring_, arity_);
    if (ring_.is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, ring_.mul(c, s));
    return r;
  }

  Coeff evaluate(std::span<const Coeff> point) const {
    if (point.size() != arity_) throw ArityMismatch("evaluation point has wrong arity");
    Coeff sum = ring_.zero();
    for (const auto& [e, c] : terms_) {
      Coeff term = c;
      for (std::size_t i = 0; i < arity_; ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) term = ring_.mul(term, point[i]);
      sum = ring_.add(sum, term);
    }
    return sum;
  }

  /// Terms of maximal total degree.
  SparsePolynomial top_degree_part() const {
    SparsePolynomial r(ring_, arity_);
    const auto d = total_degree();
    for (const auto& [e, c] : terms_)
      if (static_cast<std::int64_t>(e.total_degree()) == d) r.terms_.emplace(e, c);
    return r;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.ring_ == b.ring_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  void check_compatible(const SparsePolynomial& o) const {
    if (arity_ != o.arity_) throw ArityMismatch("polynomial arity mismatch");
    if (!(ring_ == o.ring_)) throw ModulusMismatch("polynomial coefficient rings differ");
  }

  friend SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b,
                                   std::size_t term_cap = kDefaultTermCap) {
    a.check_compatible(b);
    SparsePolynomial r(a.ring_, a.arity_);
    const auto& ring = a.ring_;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        auto prod = ring.mul(ca, cb);
        if (ring.is_zero(prod)) continue;
        auto [it, inserted] = r.terms_.try_emplace(ea + eb, prod);
        if (!inserted) it->second = ring.add(it->second, prod);
        if (r.terms_.size() > term_cap)
          throw ExpansionLimitExceeded("polynomial product exceeds " +
                                       std::to_string(term_cap) + " terms");
      }
    }
    std::erase_if(r.terms_, [&](const auto& kv) { return ring.is_zero(kv.second); });
    return r;
  }

 private:
  void check_arity(const ExponentVector& e) const {
    if (e.arity() != arity_)
      throw ArityMismatch("exponent vector of arity " + std::to_string(e.arity()) +
                          " for polynomial of arity " + std::to_string(arity_));
  }

  Ring ring_;
  std::size_t arity_;
  TermMap terms_;
};

using ModPolynomial = SparsePolynomial<ModRing>;
using IntPolynomial = SparsePolynomial<IntegerRing>;

template <class Ring>
SparsePolynomial<Ring> power(const SparsePolynomial<Ring>& p, std::uint64_t e,
                             std::size_t term_cap = kDefaultTermCap) {
  auto result = SparsePolynomial<Ring>::constant(p.ring(), p.arity(), p.ring().one());
  auto base = p;
  while (e) {
    if (e & 1) result = multiply(result, base, term_cap);
    e >>= 1;
    if (e) base = multiply(base, base, term_cap);
  }
  return result;
}

/// x_1 + ... + x_n.
template <class Ring>
SparsePolynomial<Ring> linear_sum(const Ring& ring, std::size_t n) {
  SparsePolynomial<Ring> p(ring, n);
  for (std::size_t i = 0; i < n; ++i) p += SparsePolynomial<Ring>::variable(ring, n, i);
  return p;
}

/// (x_index)_j expanded as a polynomial: (x)(x-1)...(x-j+1).
template <class Ring>
SparsePolynomial<Ring> falling_factorial_poly(const Ring& ring, std::size_t arity,
                                              std::size_t index, std::uint32_t j) {
  auto result = SparsePolynomial<Ring>::constant(ring, arity, ring.one());
  const auto x = SparsePolynomial<Ring>::variable(ring, arity, index);
  for (std::uint32_t t = 0; t < j; ++t) {
    auto factor = x;
    factor.add_term(ExponentVector::zeros(arity), ring.from_int(-static_cast<std::int64_t>(t)));
    result = multiply(result, factor);
  }
  return result;
}

/// P* = sum over top-degree monomials c_j (x_1)_{j_1} ... (x_n)_{j_n}.
/// Shares every top-degree coefficient with P.
template <class Ring>
SparsePolynomial<Ring> pstar_transform(const SparsePolynomial<Ring>& p) {
  if (p.is_zero()) throw std::invalid_argument("pstar_transform of the zero polynomial");
  const auto& ring = p.ring();
  SparsePolynomial<Ring> result(ring, p.arity());
  const auto top = p.top_degree_part();
  for (const auto& [e, c] : top.terms()) {
    auto term = SparsePolynomial<Ring>::constant(ring, p.arity(), c);
    for (std::size_t i = 0; i < p.arity(); ++i)
      if (e[i] > 0) term = multiply(term, falling_factorial_poly(ring, p.arity(), i, e[i]));
    result += term;
  }
  return result;
}

/// prod_{1<=i<j<=n} (x_j - x_i)^exponent, expanded.
template <class Ring>
SparsePolynomial<Ring> difference_product(std::size_t n, std::uint32_t exponent, const Ring& ring,
                                          std::size_t term_cap = kDefaultTermCap) {
  if (n < 2) throw std::invalid_argument("difference_product needs n >= 2");
  auto result = SparsePolynomial<Ring>::constant(ring, n, ring.one());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto diff = SparsePolynomial<Ring>::variable(ring, n, j) -
                  SparsePolynomial<Ring>::variable(ring, n, i);
      result = multiply(result, power(diff, exponent, term_cap), term_cap);
    }
  }
  return result;
}

ModPolynomial reduce(const IntPolynomial& p, PrimeModulus mod);

// Text format: a header line "arity <n> mod <p>" (mod 0 = exact integers),
// then one term per line "c j1 ... jn". Blank lines and '#' comments are
// ignored; repeated exponent vectors are summed.
using AnyPolynomial = std::variant<ModPolynomial, IntPolynomial>;

AnyPolynomial parse_polynomial(std::istream& in);
AnyPolynomial parse_polynomial(const std::string& text);
ModPolynomial parse_mod_polynomial(const std::string& text);
void write_polynomial(std::ostream& out, const ModPolynomial& p);
void write_polynomial(std::ostream& out, const IntPolynomial& p);

/// Human-readable form, e.g. "x1^2*x2 + 3*x1 + 4".
std::string to_string(const ModPolynomial& p);
std::string to_string(const IntPolynomial& p);

extern template class SparsePolynomial<ModRing>;
extern template class SparsePolynomial<IntegerRing>;

}  // namespace rsum
