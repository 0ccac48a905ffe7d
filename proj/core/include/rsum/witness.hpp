#pragma once

// Constructive side of the distinct-sum bound: classifying coefficient
// vectors, pairing them so that paired coefficients do not cancel, finding
// exponent vectors m on which the alternating sum f is nonzero, searching a
// grid for a nonvanishing point, and the two coefficient identities that turn
// such data into a nonzero coefficient.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "rsum/field.hpp"
#include "rsum/poly.hpp"
#include "rsum/sumset.hpp"

namespace rsum {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The recursive and brute-force witness searches disagreed.
class WitnessDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Hypotheses hold but neither search found a vector (possible only when p
/// is too small for the degree argument).
class WitnessNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DeltaClassification {
  int delta = 0;
  std::optional<Residue> a;  // the element a with support {a, -a}
  std::optional<std::pair<std::size_t, std::size_t>> counts;  // #{a_i = a}, #{a_i = -a}
};

/// delta = 1 iff {a_i} = {a, -a} with a != -a and both multiplicities odd.
DeltaClassification delta_indicator(const CoefficientVector& a);

/// A bijection of {0, ..., n-1}; images[i] is the image of i.
struct Permutation {
  std::vector<std::size_t> images;

  static Permutation identity(std::size_t n);
  std::size_t size() const { return images.size(); }
  /// +1 or -1 by inversion count.
  int sign() const;
  bool is_valid() const;
};

/// sigma with a[sigma(2i)] + a[sigma(2i+1)] != 0 for 0 <= i < floor(n/2) - delta(a).
/// Built by stripping a non-canceling pair and recursing. Throws
/// PreconditionError for p = 2 and n >= 2.
Permutation pairing_permutation(const CoefficientVector& a);
bool pairing_ok(const CoefficientVector& a, const Permutation& sigma);

inline constexpr std::size_t kMaxWitnessArity = 8;

/// sum over sigma in S_n of sgn(sigma) prod_j (k_j - x_j)_{sigma(j)-1} a_j^{sigma(j)-1}, mod p.
Residue f_eval(std::span<const std::int64_t> k, const CoefficientVector& a,
               std::span<const std::int64_t> x);

using WitnessVector = std::vector<std::int64_t>;

struct WitnessOptions {
  /// Case (ii) needs the canceling pair at positions 1, 2 rather than anywhere.
  bool strict_pair = false;
};

enum class WitnessCase { none, distinct_free, canceling_pair, exceptional };

/// Which hypothesis (if any) the instance meets: delta = 0; delta = 1 with a
/// canceling pair s < t, k_s + k_t != 1 mod p; or the n = 4 configuration
/// a = (c, c, c, -c), k = (5, 5, 5, p - 4) up to a common permutation.
WitnessCase classify_witness_case(std::span<const std::int64_t> k, const CoefficientVector& a,
                                  const WitnessOptions& opts = {});

/// Following the proof: reorder by a pairing, recurse on the first n - 2
/// coordinates, then scan m_{n-1} over 0..2n-3. If every scanned point
/// vanishes (only possible for p < 2n - 2) the next prefix witness is tried.
std::optional<WitnessVector> find_witness_recursive(std::span<const std::int64_t> k,
                                                    const CoefficientVector& a,
                                                    const WitnessOptions& opts = {});

/// First m in lexicographic order with sum C(n,2), m_i <= max(2n-3, 0), f(m) != 0.
std::optional<WitnessVector> find_witness_brute_force(std::span<const std::int64_t> k,
                                                      const CoefficientVector& a);

/// Runs both searches. Throws PreconditionError when no hypothesis holds, p = 2
/// or p < 2n - 2, WitnessDisagreement when the searches disagree on existence, and
/// WitnessNotFound when both come back empty.
WitnessVector find_witness(std::span<const std::int64_t> k, const CoefficientVector& a,
                           const WitnessOptions& opts = {});

bool witness_ok(std::span<const std::int64_t> k, const CoefficientVector& a,
                std::span<const std::int64_t> m);

struct CancelingPair {
  std::size_t s, t;  // 0-based, s < t
};
struct ExceptionalCase {};
using Lemma23Result = std::variant<CancelingPair, ExceptionalCase>;

/// For n >= 4, delta(a) = 1, k_i >= 2n-3, p >= sum k - n^2 + n + 1: the first
/// canceling pair with k_s + k_t != 1 mod p, or the exceptional configuration.
Lemma23Result lemma_2_3_classify(std::span<const std::int64_t> k, const CoefficientVector& a);

/// First grid point (lexicographic over A_1 x ... x A_n) with P != 0.
std::optional<std::vector<Residue>> cn_witness_search(const ModPolynomial& P, const SetFamily& A);

/// A top-degree monomial x^k of P with |A_i| > k_i for all i, if any.
std::optional<ExponentVector> nullstellensatz_exponent(const ModPolynomial& P,
                                                       std::span<const std::size_t> sizes);

struct CertificateSides {
  Residue lhs = 0;
  Residue rhs = 0;
  bool equal() const { return lhs == rhs; }
};

/// prod (|A_j|-1-m_j)! [x^{|A|-1}] prod_{i<j}(b_j x_j - b_i x_i) prod x_j^{m_j} (sum x)^N
/// against N! f_eval(|A|-1, b, m), where b = a^{-1} and N = sum |A_j| - n^2.
CertificateSides certificate_distinct_sum(std::span<const std::size_t> sizes,
                                          const CoefficientVector& a,
                                          std::span<const std::int64_t> m,
                                          std::size_t term_cap = kDefaultTermCap);

/// prod m_i! [x^m] P (sum x)^M against M! P*(m), where M = sum m - deg P.
CertificateSides certificate_polynomial_sum(const ModPolynomial& P,
                                            std::span<const std::int64_t> m,
                                            std::size_t term_cap = kDefaultTermCap);

}  // namespace rsum
