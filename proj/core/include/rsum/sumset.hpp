#pragma once

// Exact enumeration of restricted sumsets and restricted value sets over
// Z/pZ. Everything here is brute force with pruning; the bounds module
// compares its closed forms against these cardinalities.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsum/field.hpp"
#include "rsum/poly.hpp"

namespace rsum {

/// A_1, ..., A_n: nonempty, sorted, duplicate-free residue lists.
class SetFamily {
 public:
  SetFamily(PrimeModulus mod, std::vector<std::vector<Residue>> sets);

  /// A_1 = ... = A_n = set.
  static SetFamily common(PrimeModulus mod, std::vector<Residue> set, std::size_t n);

  /// "0,1,2;0,1,3", "interval:m" for {0..m-1}, "full" for Z/pZ. Elements are
  /// reduced mod p. A single set is replicated when n > 1.
  static SetFamily parse(std::string_view text, PrimeModulus mod, std::size_t n = 0);

  PrimeModulus modulus() const { return mod_; }
  std::size_t arity() const { return sets_.size(); }
  const std::vector<Residue>& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<std::vector<Residue>>& sets() const { return sets_; }
  std::vector<std::size_t> sizes() const;
  std::uint64_t grid_size() const;

  std::string to_string() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  PrimeModulus mod_;
  std::vector<std::vector<Residue>> sets_;
};

/// a_1, ..., a_n, all nonzero.
class CoefficientVector {
 public:
  CoefficientVector(PrimeModulus mod, std::vector<Residue> coeffs);
  static CoefficientVector ones(PrimeModulus mod, std::size_t n);
  /// "1,2,-1"; entries reduced mod p.
  static CoefficientVector parse(std::string_view text, PrimeModulus mod);

  PrimeModulus modulus() const { return mod_; }
  std::size_t size() const { return a_.size(); }
  Residue operator[](std::size_t i) const { return a_[i]; }
  std::span<const Residue> values() const { return a_; }
  std::string to_string() const;

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

 private:
  PrimeModulus mod_;
  std::vector<Residue> a_;
};

/// A subset of Z/pZ stored as a bitset.
class ResidueSet {
 public:
  explicit ResidueSet(PrimeModulus mod);

  PrimeModulus modulus() const { return mod_; }
  void insert(Residue r);
  bool contains(Residue r) const { return (words_[r >> 6] >> (r & 63)) & 1U; }
  std::size_t size() const { return card_; }
  bool empty() const { return card_ == 0; }
  std::vector<Residue> elements() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  PrimeModulus mod_;
  std::vector<std::uint64_t> words_;
  std::size_t card_ = 0;
};

/// Side condition on (x_1, ..., x_n). Pairwise restrictions are checked
/// incrementally during enumeration; polynomial ones only at full tuples.
class Restriction {
 public:
  enum class Kind { none, distinct, polynomial, pairwise };
  using PairPredicate = std::function<bool(std::size_t i, std::size_t j, Residue xi, Residue xj)>;

  static Restriction none() { return Restriction(Kind::none); }
  static Restriction distinct() { return Restriction(Kind::distinct); }
  /// Admit x iff P(x) != 0.
  static Restriction polynomial(ModPolynomial p);
  /// Admit x iff allowed(i, j, x_i, x_j) for every i < j.
  static Restriction pairwise(std::size_t n, PrimeModulus mod, const PairPredicate& allowed,
                              std::string label = "pairwise");

  Kind kind() const { return kind_; }
  const ModPolynomial& poly() const;
  const std::string& label() const { return label_; }

  /// Pairwise check for i < j (true for none/polynomial kinds).
  bool pair_allowed(std::size_t i, std::size_t j, Residue xi, Residue xj) const {
    switch (kind_) {
      case Kind::distinct:
        return xi != xj;
      case Kind::pairwise:
        return table_[((i * n_ + j) * p_ + xi) * p_ + xj] != 0;
      default:
        return true;
    }
  }
  /// Full check of a complete tuple.
  bool admits(std::span<const Residue> x) const;

 private:
  explicit Restriction(Kind k) : kind_(k), label_(default_label(k)) {}
  static std::string default_label(Kind k);

  Kind kind_;
  std::string label_;
  std::vector<ModPolynomial> poly_;  // 0 or 1 entries
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::vector<std::uint8_t> table_;
};

/// x_i - x_j not in S_ij; `avoid[i][j]` lists S_ij (empty = unconstrained),
/// checked for every ordered pair i != j that has a nonempty list.
Restriction avoid_differences(PrimeModulus mod,
                              const std::vector<std::vector<std::vector<Residue>>>& avoid);

/// f(x_i) != f(x_j) for i != j, for a univariate f given by its
/// coefficients (constant term first).
Restriction distinct_images(PrimeModulus mod, std::size_t n, const std::vector<Residue>& f);

/// f(x) = a_1 x_1^k + ... + a_n x_n^k + g(x) with deg g < k.
class ValuePolynomial {
 public:
  ValuePolynomial(std::uint32_t k, CoefficientVector a, ModPolynomial g);
  ValuePolynomial(std::uint32_t k, CoefficientVector a);  // g = 0

  std::uint32_t k() const { return k_; }
  const CoefficientVector& coefficients() const { return a_; }
  const ModPolynomial& g() const { return g_; }
  std::size_t arity() const { return a_.size(); }
  /// True when g has no monomial mixing two variables.
  bool separable() const;
  Residue evaluate(std::span<const Residue> x) const;
  /// f as a single polynomial.
  ModPolynomial as_polynomial() const;
  /// For separable f: t[i][v] with f(x) = sum_i t[i][x_i] (the constant of g
  /// sits in t[0]). Throws std::logic_error otherwise.
  std::vector<std::vector<Residue>> coordinate_tables() const;

 private:
  std::uint32_t k_;
  CoefficientVector a_;
  ModPolynomial g_;
};

/// C = { a_1 x_1 + ... + a_n x_n : x_i in A_i, x_i distinct if `distinct` }.
ResidueSet restricted_linear_sumset(const CoefficientVector& a, const SetFamily& A, bool distinct);
ResidueSet restricted_linear_sumset(const CoefficientVector& a, const SetFamily& A,
                                    const Restriction& r);

/// C = { x_1 + ... + x_n : x_i in A_i, P(x) != 0 }.
ResidueSet polynomial_restricted_sumset(const SetFamily& A, const ModPolynomial& P);

/// V = { f(x) : x_i in A_i, P(x) != 0 }.
ResidueSet restricted_value_set(const ValuePolynomial& f, const SetFamily& A,
                                const ModPolynomial& P);
ResidueSet restricted_value_set(const ValuePolynomial& f, const SetFamily& A,
                                const Restriction& r);

}  // namespace rsum
