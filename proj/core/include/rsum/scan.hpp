#pragma once

// Exhaustive and randomized scans of a bound over a box of instances.
//
// A scan enumerates problems (prime, coefficient vector, value map,
// restriction) and, for each, every admissible set family up to the symmetry
// the theorem allows. For each tuple of set sizes it reports the smallest
// cardinality seen, which is the only value that can violate a bound that
// depends on sizes alone. Results are merged in work-item order, so output is
// independent of the number of worker threads.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsum/bounds.hpp"

namespace rsum {

enum class CoeffMode {
  ones,       // a = (1, ..., 1)
  all,        // every vector in (F*)^n
  canonical,  // one vector per scaling(+permutation) orbit, rows expanded back
  random,     // one random vector per random instance
  explicit_,  // the vector in ScanConfig::explicit_coeffs
};

CoeffMode parse_coeff_mode(const std::string& s);
std::string_view to_string(CoeffMode m);
/// What `--coeffs` means when omitted.
CoeffMode default_coeff_mode(TheoremId id, bool random);

struct ScanConfig {
  TheoremId theorem = TheoremId::dh;
  std::vector<std::uint32_t> primes;
  std::size_t n = 2;
  std::uint32_t size_lo = 1;
  std::uint32_t size_hi = 0;  // 0: up to p
  /// One explicit family ("0,1,2;1,3" or a single set for all n).
  std::optional<std::string> sets;
  CoeffMode coeffs = CoeffMode::canonical;
  std::vector<std::int64_t> explicit_coeffs;
  std::vector<std::uint32_t> ks{1};
  /// deg f for cor1.2f, m for cor1.2d.
  std::vector<std::int64_t> ms{1};
  /// Random instances per (p, k, m); 0 = exhaustive over value maps.
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::uint32_t max_deg = 3;
  /// Restriction polynomial for thm1.3 / thm5.2 without --random.
  std::optional<std::string> poly_text;
  bool canonicalize = true;
  std::size_t jobs = 1;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const ScanConfig& cfg);

struct ScanRow {
  BoundReport report;
  std::uint32_t k = 1;
  std::optional<std::size_t> instance;
  /// An extremal family, "0,1;2,3".
  std::string family;
  /// Extra JSON members, values already encoded.
  std::vector<std::pair<std::string, std::string>> extra;
};

struct ScanSummary {
  std::vector<ScanRow> rows;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t vacuous = 0;
  std::optional<std::int64_t> min_slack;

  std::vector<const ScanRow*> violations() const;
};

ScanSummary run_scan(const ScanConfig& cfg);

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows);
void write_jsonl(std::ostream& out, const std::vector<ScanRow>& rows);
/// One JSON object with the counts and the violating rows.
std::string summary_json(const ScanSummary& s);

}  // namespace rsum
