#pragma once

// Constant-term identities for difference products, checked by expansion.

#include <cstdint>
#include <span>

#include "rsum/field.hpp"
#include "rsum/poly.hpp"

namespace rsum {

/// Coefficient of prod x_i^{m_i (n-1)} in prod_{i<j} (x_i - x_j)^{m_i + m_j}.
BigInt dyson_coefficient(std::span<const std::uint32_t> m, std::size_t term_cap = kDefaultTermCap);
/// The same expansion carried out over Z/pZ.
Residue dyson_coefficient_mod(std::span<const std::uint32_t> m, PrimeModulus mod,
                              std::size_t term_cap = kDefaultTermCap);
/// (-1)^{sum (j-1) m_j} (sum m)! / prod m_j!.
BigInt dyson_closed_form(std::span<const std::uint32_t> m);

/// Coefficient of prod x_i^{(m-1)(n-1)+i-1} in prod_{i<j} (x_j - x_i)^{2m-1}.
BigInt sy_coefficient(std::uint32_t n, std::uint32_t m, std::size_t term_cap = kDefaultTermCap);
/// (-1)^{(m-1) C(n,2)} (mn)! / (m!^n n!).
BigInt sy_closed_form(std::uint32_t n, std::uint32_t m);

}  // namespace rsum
