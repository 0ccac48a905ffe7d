#include "rsum/dyson.hpp"

#include <numeric>
#include <stdexcept>

namespace rsum {

namespace {

template <class Ring>
typename Ring::value_type dyson_expand(std::span<const std::uint32_t> m, const Ring& ring,
                                       std::size_t term_cap) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("dyson coefficient needs at least one exponent");
  using Poly = SparsePolynomial<Ring>;
  auto prod = Poly::constant(ring, n, ring.one());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto diff = Poly::variable(ring, n, i) - Poly::variable(ring, n, j);
      prod = multiply(prod, power(diff, m[i] + m[j], term_cap), term_cap);
    }
  auto target = ExponentVector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = m[i] * static_cast<std::uint32_t>(n - 1);
  return prod.coefficient(target);
}

}  // namespace

BigInt dyson_coefficient(std::span<const std::uint32_t> m, std::size_t term_cap) {
  return dyson_expand(m, IntegerRing{}, term_cap);
}

Residue dyson_coefficient_mod(std::span<const std::uint32_t> m, PrimeModulus mod,
                              std::size_t term_cap) {
  return dyson_expand(m, ModRing(mod), term_cap);
}

BigInt dyson_closed_form(std::span<const std::uint32_t> m) {
  std::uint64_t total = 0, twist = 0;
  BigInt denom = 1;
  for (std::size_t j = 0; j < m.size(); ++j) {
    total += m[j];
    twist += j * m[j];
    denom *= factorial_exact(m[j]);
  }
  BigInt v = factorial_exact(total) / denom;
  return twist % 2 ? BigInt(-v) : v;
}

BigInt sy_coefficient(std::uint32_t n, std::uint32_t m, std::size_t term_cap) {
  if (n < 1 || m < 1) throw std::invalid_argument("sy coefficient needs n, m >= 1");
  if (n == 1) return 1;
  const IntegerRing ring;
  auto prod = difference_product(n, 2 * m - 1, ring, term_cap);
  auto target = ExponentVector::zeros(n);
  for (std::uint32_t i = 0; i < n; ++i) target[i] = (m - 1) * (n - 1) + i;
  return prod.coefficient(target);
}

BigInt sy_closed_form(std::uint32_t n, std::uint32_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("sy closed form needs n, m >= 1");
  BigInt denom = factorial_exact(n);
  const BigInt mf = factorial_exact(m);
  for (std::uint32_t i = 0; i < n; ++i) denom *= mf;
  BigInt v = factorial_exact(static_cast<std::uint64_t>(m) * n) / denom;
  const std::uint64_t e = static_cast<std::uint64_t>(m - 1) * n * (n - 1) / 2;
  return e % 2 ? BigInt(-v) : v;
}

}  // namespace rsum
