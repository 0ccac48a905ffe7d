#pragma once

// Subsets of Z/pZ as bitmasks (p <= 63), their orbits under affine maps and
// dilations, and orbit representatives of coefficient vectors.

#include <cstdint>
#include <vector>

#include "rsum/field.hpp"

namespace rsum {

using SubsetMask = std::uint64_t;

inline constexpr std::uint32_t kMaxMaskPrime = 63;

std::vector<Residue> mask_elements(SubsetMask s);
SubsetMask elements_mask(const std::vector<Residue>& elems);

/// All subsets of Z/pZ with lo <= |S| <= hi, in increasing mask order.
std::vector<SubsetMask> subsets_in_size_range(std::uint32_t p, std::uint32_t lo, std::uint32_t hi);

enum class SetSymmetry { none, dilation, affine };

/// Smallest mask in the orbit of s under x -> c x (+ t for affine).
SubsetMask canonical_subset(SubsetMask s, std::uint32_t p, SetSymmetry g);

/// Subsets in the size range that are their own orbit representative.
std::vector<SubsetMask> canonical_subsets(std::uint32_t p, std::uint32_t lo, std::uint32_t hi,
                                          SetSymmetry g);

/// Lexicographically smallest sorted(c a) over c in F*.
std::vector<Residue> canonical_coefficients(const std::vector<Residue>& a, PrimeModulus mod);

/// One representative per orbit of (F*)^n under global scaling and
/// coordinate permutation, in lexicographic order.
std::vector<std::vector<Residue>> coefficient_classes(std::size_t n, PrimeModulus mod);

/// As coefficient_classes, with each coordinate also free to move by a
/// nonzero k-th power (the orbit structure of unrestricted k-th power sums
/// over independent sets).
std::vector<std::vector<Residue>> power_coefficient_classes(std::size_t n, PrimeModulus mod,
                                                            std::uint32_t k);

/// The image of s under x -> x^e (a bijection when gcd(e, p - 1) = 1).
SubsetMask power_image(SubsetMask s, std::uint32_t p, std::uint32_t e);

/// All of (F*)^n in lexicographic order.
std::vector<std::vector<Residue>> all_coefficient_vectors(std::size_t n, PrimeModulus mod);

}  // namespace rsum
