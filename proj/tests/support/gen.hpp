#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "rsum/poly.hpp"
#include "rsum/sumset.hpp"

namespace rsum::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return range(0, 1) == 1; }

  std::uint32_t prime(std::uint32_t max = 13) {
    static constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    std::vector<std::uint32_t> ok;
    for (auto p : kPrimes)
      if (p <= max) ok.push_back(p);
    return ok[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(ok.size()) - 1))];
  }

  std::vector<Residue> subset(PrimeModulus mod, std::size_t min_size = 1) {
    while (true) {
      std::vector<Residue> s;
      for (Residue x = 0; x < mod.value(); ++x)
        if (coin()) s.push_back(x);
      if (s.size() >= min_size) return s;
    }
  }

  SetFamily family(PrimeModulus mod, std::size_t n) {
    std::vector<std::vector<Residue>> sets;
    for (std::size_t i = 0; i < n; ++i) sets.push_back(subset(mod));
    return SetFamily(mod, sets);
  }

  CoefficientVector coeffs(PrimeModulus mod, std::size_t n) {
    std::vector<Residue> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(static_cast<Residue>(range(1, mod.value() - 1)));
    return CoefficientVector(mod, a);
  }

  ExponentVector monomial(std::size_t n, std::uint32_t deg) {
    auto e = ExponentVector::zeros(n);
    for (std::uint32_t t = 0; t < deg; ++t) ++e[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(n) - 1))];
    return e;
  }

  ModPolynomial poly(PrimeModulus mod, std::size_t n, std::uint32_t max_deg, std::size_t max_terms = 4) {
    ModPolynomial P(ModRing(mod), n);
    const auto terms = range(1, static_cast<std::int64_t>(max_terms));
    for (std::int64_t t = 0; t < terms; ++t)
      P.add_term(monomial(n, static_cast<std::uint32_t>(range(0, max_deg))),
                 static_cast<Residue>(range(1, mod.value() - 1)));
    return P;
  }

  IntPolynomial int_poly(std::size_t n, std::uint32_t max_deg, std::size_t max_terms = 4) {
    IntPolynomial P(IntegerRing{}, n);
    const auto terms = range(1, static_cast<std::int64_t>(max_terms));
    for (std::int64_t t = 0; t < terms; ++t)
      P.add_term(monomial(n, static_cast<std::uint32_t>(range(0, max_deg))), BigInt(range(-20, 20)));
    return P;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rsum::testing
