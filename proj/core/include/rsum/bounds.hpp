#pragma once

// Lower-bound formulas for restricted sumsets and restricted value sets, as
// pure integer functions of the instance parameters. A formula whose
// hypotheses fail on an instance is reported as vacuous (std::nullopt), never
// clamped.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsum/field.hpp"

namespace rsum {

enum class TheoremId {
  cd,        // Cauchy-Davenport
  dh,        // Dias da Silva-Hamidoune
  anr,       // Alon-Nathanson-Ruzsa
  conj1_1,   // distinct linear forms, common set (conjectured)
  thm1_2,    // distinct linear forms, per-set sizes
  eq1_8,     // distinct linear forms, weak field term
  thm1_3,    // polynomial restriction
  cor1_2f,   // f(x_i) != f(x_j)
  cor1_2d,   // x_i - x_j outside small sets, common set
  cor1_3,    // x_i - x_j outside small sets, per-set sizes
  thm5_1i,   // value set, unrestricted
  thm5_1ii,  // value set, distinct, k >= n
  thm5_2,    // value set, polynomial restriction
  cor5_1,    // value set, distinct
  cor5_2,    // value set, distinct, equal sizes
  conj5_2,   // value set, distinct, common set (conjectured)
};

std::string_view to_string(TheoremId id);
/// Accepts the stable ids "cd", "dh", ..., "conj5.2"; throws std::invalid_argument.
TheoremId parse_theorem_id(std::string_view s);
std::span<const TheoremId> all_theorems();

/// Which image set a theorem speaks about.
enum class Family { linear_distinct, linear_unrestricted, polynomial_sum, value_set };
Family theorem_family(TheoremId id);
/// True for conjectures, whose violations are findings rather than bugs.
bool is_conjecture(TheoremId id);
/// True when the theorem is stated for A_1 = ... = A_n.
bool needs_common_set(TheoremId id);

/// Everything any bound needs. Unused fields are ignored by a given theorem.
struct BoundInput {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::vector<std::int64_t> sizes;  // |A_1|, ..., |A_n|
  std::vector<Residue> coeffs;      // a_1, ..., a_n (penalty terms)
  std::int64_t k = 1;               // value-set exponent
  std::int64_t deg_p = 0;           // deg P
  /// k_1..k_n with sum deg P and nonzero top coefficient; absent when no
  /// such monomial fits the sizes.
  std::optional<std::vector<std::int64_t>> top_exponents;
  std::int64_t m = 0;                    // deg f (cor1.2f) or the m of |S_ij| <= 2m-1 (cor1.2d)
  std::vector<std::int64_t> m_i;         // per-index max |S_ij| (cor1.3)
};

/// The bound, or nullopt when the theorem's hypotheses fail.
std::optional<std::int64_t> evaluate_bound(TheoremId id, const BoundInput& in);

// Direct entry points, one per formula group.

enum class ClassicalKind { cauchy_davenport, dh, anr };
/// dh reads sizes[0] as |A|. Throws on non-positive sizes and on anr with
/// sizes not strictly increasing.
std::int64_t classical_bound(ClassicalKind kind, std::int64_t p, std::span<const std::int64_t> sizes,
                             std::size_t n);

enum class LinearKind { conj_1_1, thm_1_2, eq_1_8 };
/// conj_1_1 and eq_1_8 read sizes[0] as |A|. Throws on an empty coefficient vector.
std::int64_t linear_restricted_bound(LinearKind kind, std::int64_t p, std::size_t n,
                                     std::span<const std::int64_t> sizes,
                                     std::span<const Residue> a);

/// [n = 2 and a_1 + a_2 = 0 mod p].
bool opposite_pair_penalty(std::span<const Residue> a, std::uint32_t p);
/// [n = 2 and a_1 = a_2].
bool equal_pair_penalty(std::span<const Residue> a);

/// Delta(n, k) in closed form.
std::int64_t delta_nk(std::int64_t n, std::int64_t k);
/// sum_{i=1}^n floor((i-1)/k).
std::int64_t delta_nk_direct(std::int64_t n, std::int64_t k);
/// {m}_k [{m}_k < {n}_k].
std::int64_t r_kmn(std::int64_t k, std::int64_t m, std::int64_t n);
/// (sum_{i=1}^n floor((m-i)/k), four-term closed form).
std::pair<std::int64_t, std::int64_t> lemma_5_1_sides(std::int64_t m, std::int64_t n, std::int64_t k);

/// Smallest |A| with |A| >= sqrt(4p - 7).
std::int64_t full_coverage_min_size(std::int64_t p);

enum class BoundStatus { holds, violated, vacuous };
std::string_view to_string(BoundStatus s);

/// One checked instance.
struct BoundReport {
  TheoremId theorem{};
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::vector<std::int64_t> sizes;
  std::vector<Residue> coeffs;
  std::string restriction;
  std::int64_t card = 0;
  std::optional<std::int64_t> bound;
  BoundStatus status = BoundStatus::vacuous;

  std::optional<std::int64_t> slack() const {
    if (!bound) return std::nullopt;
    return card - *bound;
  }
};

/// Fills in status from card and bound.
BoundReport make_report(TheoremId id, const BoundInput& in, std::int64_t card,
                        std::string restriction);

}  // namespace rsum
