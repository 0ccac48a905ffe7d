#include <doctest.h>

#include <map>
#include <tuple>
#include <vector>

#include "rsum/scan.hpp"
#include "rsum/subsets.hpp"
#include "rsum/sumset.hpp"

using namespace rsum;

namespace {

using Key = std::tuple<std::vector<std::int64_t>, std::vector<Residue>>;

std::map<Key, std::int64_t> cards(const ScanSummary& s) {
  std::map<Key, std::int64_t> out;
  for (const auto& r : s.rows) out[{r.report.sizes, r.report.coeffs}] = r.report.card;
  return out;
}

// Minimum card per size tuple over every family, by direct enumeration.
std::map<std::vector<std::int64_t>, std::int64_t> brute_min(std::uint32_t p, std::size_t n,
                                                           const CoefficientVector& a,
                                                           const std::function<std::size_t(const SetFamily&)>& card) {
  const PrimeModulus mod(p);
  const auto all = subsets_in_size_range(p, 1, p);
  std::map<std::vector<std::int64_t>, std::int64_t> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<std::vector<Residue>> sets;
    std::vector<std::int64_t> sizes;
    for (auto i : idx) {
      sets.push_back(mask_elements(all[i]));
      sizes.push_back(static_cast<std::int64_t>(sets.back().size()));
    }
    const auto c = static_cast<std::int64_t>(card(SetFamily(mod, sets)));
    auto [it, fresh] = out.try_emplace(sizes, c);
    if (!fresh) it->second = std::min(it->second, c);
    std::size_t d = n;
    while (d > 0 && ++idx[d - 1] == all.size()) idx[--d] = 0;
    if (d == 0) return out;
  }
  (void)a;
}

}  // namespace

TEST_CASE("pruned distinct-sum scan matches brute force") {
  for (std::uint32_t p : {5U, 7U}) {
    const PrimeModulus mod(p);
    const CoefficientVector a(mod, {1, 2});
    ScanConfig c;
    c.theorem = TheoremId::thm1_2;
    c.primes = {p};
    c.n = 2;
    c.coeffs = CoeffMode::explicit_;
    c.explicit_coeffs = {1, 2};
    const auto s = run_scan(c);
    const auto ref = brute_min(p, 2, a, [&](const SetFamily& A) {
      return restricted_linear_sumset(a, A, true).size();
    });
    for (const auto& r : s.rows) CHECK(r.report.card == ref.at(r.report.sizes));
    CHECK(s.rows.size() == ref.size());
  }
}

TEST_CASE("pruned value-set scan matches brute force") {
  const std::uint32_t p = 5;
  const PrimeModulus mod(p);
  const CoefficientVector a(mod, {1, 3, 1});
  ScanConfig c;
  c.theorem = TheoremId::cor5_1;
  c.primes = {p};
  c.n = 3;
  c.ks = {2};
  c.coeffs = CoeffMode::explicit_;
  c.explicit_coeffs = {1, 3, 1};
  const auto s = run_scan(c);
  const ValuePolynomial f(2, a);
  const auto ref = brute_min(p, 3, a, [&](const SetFamily& A) {
    return restricted_value_set(f, A, Restriction::distinct()).size();
  });
  for (const auto& r : s.rows) CHECK(r.report.card == ref.at(r.report.sizes));
  CHECK(s.rows.size() == ref.size());
}

TEST_CASE("set canonicalization does not change results") {
  for (auto id : {TheoremId::thm1_2, TheoremId::thm5_1i, TheoremId::cor5_1}) {
    ScanConfig c;
    c.theorem = id;
    c.primes = {5, 7};
    c.n = 3;
    c.ks = {1, 2, 3};
    c.coeffs = CoeffMode::canonical;
    const auto fast = cards(run_scan(c));
    c.canonicalize = false;
    CHECK(cards(run_scan(c)) == fast);
  }
}

TEST_CASE("canonical coefficient classes cover every coefficient vector") {
  for (auto id : {TheoremId::thm1_2, TheoremId::conj1_1, TheoremId::cor5_1}) {
    for (std::size_t n : {2U, 3U}) {
      const std::uint32_t p = 5;
      const PrimeModulus mod(p);
      ScanConfig c;
      c.theorem = id;
      c.primes = {p};
      c.n = n;
      c.ks = {2};
      c.coeffs = CoeffMode::canonical;
      const auto canon = run_scan(c);
      const auto reps = cards(canon);
      c.coeffs = CoeffMode::all;
      const auto full = run_scan(c);
      CHECK((canon.violated == 0) == (full.violated == 0));
      for (const auto& r : full.rows) {
        // Some scaling of the row's vector is a listed representative arrangement.
        bool matched = false;
        for (Residue l = 1; l < p && !matched; ++l) {
          std::vector<Residue> b;
          for (auto x : r.report.coeffs) b.push_back(mod.mul(l, x));
          const auto it = reps.find({r.report.sizes, b});
          if (it != reps.end()) {
            CHECK(it->second == r.report.card);
            matched = true;
          }
        }
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("recorded extremal families reproduce their cardinality") {
  ScanConfig c;
  c.theorem = TheoremId::thm1_2;
  c.primes = {7};
  c.n = 3;
  c.size_lo = 4;
  const auto s = run_scan(c);
  const PrimeModulus mod(7);
  for (const auto& r : s.rows) {
    const auto A = SetFamily::parse(r.family, mod);
    CHECK(restricted_linear_sumset(CoefficientVector(mod, r.report.coeffs), A, true).size() ==
          static_cast<std::size_t>(r.report.card));
  }
}

TEST_CASE("job count does not change output") {
  ScanConfig c;
  c.theorem = TheoremId::thm1_2;
  c.primes = {5, 7};
  c.n = 3;
  std::ostringstream a, b;
  c.jobs = 1;
  write_csv(a, run_scan(c).rows);
  c.jobs = 4;
  write_csv(b, run_scan(c).rows);
  CHECK(a.str() == b.str());
}
