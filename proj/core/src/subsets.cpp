#include "rsum/subsets.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace rsum {

namespace {

void check_mask_prime(std::uint32_t p) {
  if (p > kMaxMaskPrime)
    throw std::invalid_argument("subset enumeration needs p <= " + std::to_string(kMaxMaskPrime));
}

SubsetMask full_mask(std::uint32_t p) { return p == 64 ? ~SubsetMask{0} : (SubsetMask{1} << p) - 1; }

SubsetMask rotate(SubsetMask s, std::uint32_t t, std::uint32_t p) {
  if (t == 0) return s;
  return ((s << t) | (s >> (p - t))) & full_mask(p);
}

}  // namespace

std::vector<Residue> mask_elements(SubsetMask s) {
  std::vector<Residue> out;
  while (s) {
    out.push_back(static_cast<Residue>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

SubsetMask elements_mask(const std::vector<Residue>& elems) {
  SubsetMask m = 0;
  for (auto e : elems) {
    if (e >= 64) throw std::invalid_argument("element does not fit a subset mask");
    m |= SubsetMask{1} << e;
  }
  return m;
}

std::vector<SubsetMask> subsets_in_size_range(std::uint32_t p, std::uint32_t lo, std::uint32_t hi) {
  check_mask_prime(p);
  if (p > 30) throw std::invalid_argument("exhaustive subset enumeration needs p <= 30");
  std::vector<SubsetMask> out;
  const SubsetMask end = SubsetMask{1} << p;
  for (SubsetMask s = 1; s < end; ++s) {
    const auto c = static_cast<std::uint32_t>(std::popcount(s));
    if (c >= lo && c <= hi) out.push_back(s);
  }
  return out;
}

SubsetMask canonical_subset(SubsetMask s, std::uint32_t p, SetSymmetry g) {
  check_mask_prime(p);
  if (g == SetSymmetry::none) return s;
  const PrimeModulus mod(p);
  const auto elems = mask_elements(s);
  SubsetMask best = s;
  for (Residue c = 1; c < p; ++c) {
    SubsetMask img = 0;
    for (auto x : elems) img |= SubsetMask{1} << mod.mul(c, x);
    if (g == SetSymmetry::dilation) {
      best = std::min(best, img);
      continue;
    }
    for (std::uint32_t t = 0; t < p; ++t) best = std::min(best, rotate(img, t, p));
  }
  return best;
}

std::vector<SubsetMask> canonical_subsets(std::uint32_t p, std::uint32_t lo, std::uint32_t hi,
                                          SetSymmetry g) {
  auto all = subsets_in_size_range(p, lo, hi);
  if (g == SetSymmetry::none) return all;
  std::erase_if(all, [&](SubsetMask s) { return canonical_subset(s, p, g) != s; });
  return all;
}

std::vector<Residue> canonical_coefficients(const std::vector<Residue>& a, PrimeModulus mod) {
  std::vector<Residue> best;
  for (Residue c = 1; c < mod.value(); ++c) {
    std::vector<Residue> v;
    v.reserve(a.size());
    for (auto x : a) v.push_back(mod.mul(c, x));
    std::sort(v.begin(), v.end());
    if (best.empty() || v < best) best = std::move(v);
  }
  return best;
}

std::vector<std::vector<Residue>> coefficient_classes(std::size_t n, PrimeModulus mod) {
  std::vector<std::vector<Residue>> out;
  std::vector<Residue> a(n, 1);
  std::function<void(std::size_t, Residue)> rec = [&](std::size_t i, Residue lo) {
    if (i == n) {
      if (canonical_coefficients(a, mod) == a) out.push_back(a);
      return;
    }
    for (Residue v = lo; v < mod.value(); ++v) {
      a[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 1);
  return out;
}

std::vector<std::vector<Residue>> power_coefficient_classes(std::size_t n, PrimeModulus mod,
                                                            std::uint32_t k) {
  const auto p = mod.value();
  std::vector<Residue> rep(p, 0);
  for (Residue x = 1; x < p; ++x) {
    rep[x] = x;
    for (Residue u = 1; u < p; ++u) rep[x] = std::min(rep[x], mod.mul(x, mod.pow(u, k)));
  }
  auto canonical = [&](const std::vector<Residue>& a) {
    std::vector<Residue> best;
    for (Residue c = 1; c < p; ++c) {
      std::vector<Residue> v;
      for (auto x : a) v.push_back(rep[mod.mul(c, x)]);
      std::sort(v.begin(), v.end());
      if (best.empty() || v < best) best = std::move(v);
    }
    return best;
  };
  std::vector<Residue> reps;
  for (Residue x = 1; x < p; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<std::vector<Residue>> out;
  std::vector<Residue> a(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t from) {
    if (i == n) {
      if (canonical(a) == a) out.push_back(a);
      return;
    }
    for (std::size_t r = from; r < reps.size(); ++r) {
      a[i] = reps[r];
      rec(i + 1, r);
    }
  };
  rec(0, 0);
  return out;
}

SubsetMask power_image(SubsetMask s, std::uint32_t p, std::uint32_t e) {
  check_mask_prime(p);
  const PrimeModulus mod(p);
  SubsetMask out = 0;
  for (auto x : mask_elements(s)) out |= SubsetMask{1} << mod.pow(x, e);
  return out;
}

std::vector<std::vector<Residue>> all_coefficient_vectors(std::size_t n, PrimeModulus mod) {
  std::vector<std::vector<Residue>> out;
  std::vector<Residue> a(n, 1);
  while (true) {
    out.push_back(a);
    std::size_t d = n;
    while (d > 0 && a[d - 1] + 1 == mod.value()) a[--d] = 1;
    if (d == 0) return out;
    ++a[d - 1];
  }
}

}  // namespace rsum
