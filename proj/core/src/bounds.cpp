#include "rsum/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rsum {

namespace {

constexpr std::array kIds = {
    std::pair{TheoremId::cd, std::string_view("cd")},
    std::pair{TheoremId::dh, std::string_view("dh")},
    std::pair{TheoremId::anr, std::string_view("anr")},
    std::pair{TheoremId::conj1_1, std::string_view("conj1.1")},
    std::pair{TheoremId::thm1_2, std::string_view("thm1.2")},
    std::pair{TheoremId::eq1_8, std::string_view("eq1.8")},
    std::pair{TheoremId::thm1_3, std::string_view("thm1.3")},
    std::pair{TheoremId::cor1_2f, std::string_view("cor1.2f")},
    std::pair{TheoremId::cor1_2d, std::string_view("cor1.2d")},
    std::pair{TheoremId::cor1_3, std::string_view("cor1.3")},
    std::pair{TheoremId::thm5_1i, std::string_view("thm5.1i")},
    std::pair{TheoremId::thm5_1ii, std::string_view("thm5.1ii")},
    std::pair{TheoremId::thm5_2, std::string_view("thm5.2")},
    std::pair{TheoremId::cor5_1, std::string_view("cor5.1")},
    std::pair{TheoremId::cor5_2, std::string_view("cor5.2")},
    std::pair{TheoremId::conj5_2, std::string_view("conj5.2")},
};

constexpr std::array kAll = [] {
  std::array<TheoremId, kIds.size()> out{};
  for (std::size_t i = 0; i < kIds.size(); ++i) out[i] = kIds[i].first;
  return out;
}();

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

std::int64_t sum(std::span<const std::int64_t> v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

bool all_equal(std::span<const std::int64_t> v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

// sizes as given, or a single common size replicated n times.
std::vector<std::int64_t> expand_sizes(std::span<const std::int64_t> sizes, std::size_t n) {
  if (sizes.size() == 1 && n > 1) return std::vector<std::int64_t>(n, sizes[0]);
  if (sizes.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " set sizes, got " +
                                std::to_string(sizes.size()));
  return {sizes.begin(), sizes.end()};
}

// Valid top exponents: sum deg P, each k_i < |A_i|.
bool top_exponents_fit(const BoundInput& in) {
  if (!in.top_exponents) return false;
  const auto& e = *in.top_exponents;
  if (e.size() != in.n) return false;
  for (std::size_t i = 0; i < in.n; ++i)
    if (e[i] < 0 || e[i] >= in.sizes[i]) return false;
  return sum(e) == in.deg_p;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [k, v] : kIds)
    if (k == id) return v;
  throw std::invalid_argument("unknown theorem id");
}

TheoremId parse_theorem_id(std::string_view s) {
  for (const auto& [k, v] : kIds)
    if (v == s) return k;
  std::string known;
  for (const auto& [k, v] : kIds) known += (known.empty() ? "" : ", ") + std::string(v);
  throw std::invalid_argument("unknown theorem id '" + std::string(s) + "' (known: " + known + ")");
}

std::span<const TheoremId> all_theorems() { return kAll; }

Family theorem_family(TheoremId id) {
  switch (id) {
    case TheoremId::cd:
      return Family::linear_unrestricted;
    case TheoremId::dh:
    case TheoremId::anr:
    case TheoremId::conj1_1:
    case TheoremId::thm1_2:
    case TheoremId::eq1_8:
    case TheoremId::cor1_2f:
    case TheoremId::cor1_2d:
    case TheoremId::cor1_3:
      return Family::linear_distinct;
    case TheoremId::thm1_3:
      return Family::polynomial_sum;
    default:
      return Family::value_set;
  }
}

bool is_conjecture(TheoremId id) { return id == TheoremId::conj1_1 || id == TheoremId::conj5_2; }

bool needs_common_set(TheoremId id) {
  switch (id) {
    case TheoremId::dh:
    case TheoremId::conj1_1:
    case TheoremId::eq1_8:
    case TheoremId::cor1_2f:
    case TheoremId::cor1_2d:
    case TheoremId::conj5_2:
      return true;
    default:
      return false;
  }
}

bool opposite_pair_penalty(std::span<const Residue> a, std::uint32_t p) {
  return a.size() == 2 && (std::uint64_t{a[0]} + a[1]) % p == 0;
}

bool equal_pair_penalty(std::span<const Residue> a) { return a.size() == 2 && a[0] == a[1]; }

std::int64_t delta_nk(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("delta_nk needs n, k >= 1");
  const auto q = n / k;
  return q * n - k * q * (q + 1) / 2;
}

std::int64_t delta_nk_direct(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("delta_nk needs n, k >= 1");
  std::int64_t s = 0;
  for (std::int64_t i = 1; i <= n; ++i) s += floor_div(i - 1, k);
  return s;
}

std::int64_t r_kmn(std::int64_t k, std::int64_t m, std::int64_t n) {
  const auto mk = least_residue(m, k);
  return mk < least_residue(n, k) ? mk : 0;
}

std::pair<std::int64_t, std::int64_t> lemma_5_1_sides(std::int64_t m, std::int64_t n,
                                                      std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("lemma_5_1_sides needs n, k >= 1");
  std::int64_t lhs = 0;
  for (std::int64_t i = 1; i <= n; ++i) lhs += floor_div(m - i, k);
  const auto q = n / k;
  const auto rhs = m * q + least_residue(n, k) * floor_div(m - n, k) - k * q * (q + 1) / 2 +
                   r_kmn(k, m, n);
  return {lhs, rhs};
}

std::int64_t full_coverage_min_size(std::int64_t p) {
  std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(4 * p - 7)));
  while (s * s < 4 * p - 7) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= 4 * p - 7) --s;
  return s;
}

std::int64_t classical_bound(ClassicalKind kind, std::int64_t p, std::span<const std::int64_t> sizes,
                             std::size_t n) {
  if (sizes.empty()) throw std::invalid_argument("no set sizes given");
  for (auto s : sizes)
    if (s <= 0) throw std::invalid_argument("set sizes must be positive");
  const auto nn = static_cast<std::int64_t>(n);
  switch (kind) {
    case ClassicalKind::cauchy_davenport:
      return std::min(p, sum(expand_sizes(sizes, n)) - nn + 1);
    case ClassicalKind::dh:
      return std::min(p, nn * sizes[0] - nn * nn + 1);
    case ClassicalKind::anr: {
      const auto s = expand_sizes(sizes, n);
      std::int64_t b = 1;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i && s[i] <= s[i - 1])
          throw std::invalid_argument("anr needs strictly increasing set sizes");
        b += s[i] - static_cast<std::int64_t>(i + 1);
      }
      return std::min(p, b);
    }
  }
  throw std::invalid_argument("unknown classical bound");
}

std::int64_t linear_restricted_bound(LinearKind kind, std::int64_t p, std::size_t n,
                                     std::span<const std::int64_t> sizes,
                                     std::span<const Residue> a) {
  if (a.empty()) throw std::invalid_argument("empty coefficient vector");
  if (sizes.empty()) throw std::invalid_argument("no set sizes given");
  const auto nn = static_cast<std::int64_t>(n);
  const auto up = static_cast<std::uint32_t>(p);
  const bool pen = n == 2 && opposite_pair_penalty(a, up);
  switch (kind) {
    case LinearKind::conj_1_1:
      return std::min(p - pen, nn * (sizes[0] - nn) + 1);
    case LinearKind::thm_1_2:
      return std::min(p - pen, sum(expand_sizes(sizes, n)) - nn * nn + 1);
    case LinearKind::eq_1_8:
      return std::min(p - choose2(nn), nn * (sizes[0] - nn) + 1);
  }
  throw std::invalid_argument("unknown linear bound");
}

std::optional<std::int64_t> evaluate_bound(TheoremId id, const BoundInput& in) {
  const auto p = static_cast<std::int64_t>(in.p);
  const auto n = static_cast<std::int64_t>(in.n);
  if (in.n == 0 || in.sizes.size() != in.n) throw std::invalid_argument("bound input needs n sizes");
  const auto& s = in.sizes;
  if (std::any_of(s.begin(), s.end(), [](auto x) { return x <= 0; })) return std::nullopt;
  if (needs_common_set(id) && !all_equal(s)) return std::nullopt;
  const auto k = in.k;

  switch (id) {
    case TheoremId::cd:
      return classical_bound(ClassicalKind::cauchy_davenport, p, s, in.n);
    case TheoremId::dh:
      return classical_bound(ClassicalKind::dh, p, s, in.n);
    case TheoremId::anr:
      for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] <= s[i - 1]) return std::nullopt;
      return classical_bound(ClassicalKind::anr, p, s, in.n);
    case TheoremId::conj1_1:
      return linear_restricted_bound(LinearKind::conj_1_1, p, in.n, s, in.coeffs);
    case TheoremId::thm1_2:
      if (p < (n - 1) * (n - 1)) return std::nullopt;
      for (auto x : s)
        if (x < 2 * n - 2) return std::nullopt;
      return linear_restricted_bound(LinearKind::thm_1_2, p, in.n, s, in.coeffs);
    case TheoremId::eq1_8:
      return linear_restricted_bound(LinearKind::eq_1_8, p, in.n, s, in.coeffs);
    case TheoremId::thm1_3:
      if (!top_exponents_fit(in)) return std::nullopt;
      return std::min(p - in.deg_p, sum(s) - n - 2 * in.deg_p + 1);
    case TheoremId::cor1_2f:
      if (in.m < 0) return std::nullopt;
      return std::min(p - in.m * choose2(n), n * (s[0] - 1 - in.m * (n - 1)) + 1);
    case TheoremId::cor1_2d: {
      if (in.m < 1) return std::nullopt;
      const auto e = 2 * in.m - 1;
      return std::min(p - e * choose2(n), n * (s[0] - 1 - e * (n - 1)) + 1);
    }
    case TheoremId::cor1_3: {
      if (n < 2 || in.m_i.size() != in.n) return std::nullopt;
      for (std::size_t i = 0; i < in.n; ++i)
        if (in.m_i[i] < 0 || in.m_i[i] * (n - 1) > s[i] - 1) return std::nullopt;
      const auto msum = sum(in.m_i);
      return std::min(p - (n - 1) * msum, sum(s) - n - 2 * (n - 1) * msum + 1);
    }
    case TheoremId::thm5_1i: {
      if (k < 1) return std::nullopt;
      std::int64_t b = 1;
      for (auto x : s) b += floor_div(x - 1, k);
      return std::min(p, b);
    }
    case TheoremId::thm5_1ii:
    case TheoremId::cor5_1: {
      if (k < 1) return std::nullopt;
      if (id == TheoremId::thm5_1ii && k < n) return std::nullopt;
      std::int64_t b = 1;
      for (std::int64_t i = 1; i <= n; ++i) {
        if (s[i - 1] < i) return std::nullopt;
        b += floor_div(s[i - 1] - i, k);
      }
      if (id == TheoremId::thm5_1ii) return std::min(p, b);
      return std::min(p, b) - delta_nk(n, k);
    }
    case TheoremId::thm5_2: {
      if (k < 1 || !top_exponents_fit(in)) return std::nullopt;
      const auto& e = *in.top_exponents;
      std::int64_t lost = 0, b = 1;
      for (std::size_t i = 0; i < in.n; ++i) {
        lost += floor_div(e[i], k);
        b += floor_div(s[i] - e[i] - 1, k) - floor_div(e[i], k);
      }
      return std::min(p - lost, b);
    }
    case TheoremId::cor5_2: {
      if (k < 1 || !all_equal(s) || s[0] < n) return std::nullopt;
      const auto m = s[0];
      const auto num = n * (m - n) - least_residue(n, k) * least_residue(m - n, k);
      return std::min(p - delta_nk(n, k), num / k + r_kmn(k, m, n) + 1);
    }
    case TheoremId::conj5_2: {
      if (k < 1 || n < k) return std::nullopt;
      const auto m = s[0];
      const bool pen = opposite_pair_penalty(in.coeffs, in.p);
      const auto num = n * (m - n) - least_residue(n, k) * least_residue(m - n, k);
      return std::min(p - pen, num / k + 1);
    }
  }
  throw std::invalid_argument("unknown theorem id");
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::holds:
      return "holds";
    case BoundStatus::violated:
      return "violated";
    case BoundStatus::vacuous:
      return "vacuous";
  }
  return "?";
}

BoundReport make_report(TheoremId id, const BoundInput& in, std::int64_t card,
                        std::string restriction) {
  BoundReport r;
  r.theorem = id;
  r.p = in.p;
  r.n = in.n;
  r.sizes = in.sizes;
  r.coeffs = in.coeffs;
  r.restriction = std::move(restriction);
  r.card = card;
  r.bound = evaluate_bound(id, in);
  if (!r.bound)
    r.status = BoundStatus::vacuous;
  else
    r.status = card < *r.bound ? BoundStatus::violated : BoundStatus::holds;
  return r;
}

}  // namespace rsum
