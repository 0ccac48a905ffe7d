#include "rsum/witness.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

namespace rsum {

namespace {

using Values = std::vector<Residue>;

struct SignedPerm {
  std::array<std::uint8_t, kMaxWitnessArity> img;
  int sign;
};

// All of S_n with signs, for n <= kMaxWitnessArity, built once.
const std::vector<SignedPerm>& permutations(std::size_t n) {
  static const auto table = [] {
    std::array<std::vector<SignedPerm>, kMaxWitnessArity + 1> t;
    for (std::size_t n = 0; n <= kMaxWitnessArity; ++n) {
      std::vector<std::size_t> v(n);
      std::iota(v.begin(), v.end(), 0);
      do {
        SignedPerm sp{};
        for (std::size_t i = 0; i < n; ++i) sp.img[i] = static_cast<std::uint8_t>(v[i]);
        sp.sign = Permutation{v}.sign();
        t[n].push_back(sp);
      } while (std::next_permutation(v.begin(), v.end()));
    }
    return t;
  }();
  return table[n];
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

DeltaClassification classify_values(std::span<const Residue> a, PrimeModulus mod) {
  DeltaClassification out;
  if (mod.value() == 2 || a.empty()) return out;
  const Residue u = a[0];
  const Residue v = mod.neg(u);
  std::size_t cu = 0, cv = 0;
  for (auto x : a) {
    if (x == u)
      ++cu;
    else if (x == v)
      ++cv;
    else
      return out;
  }
  if (cu % 2 == 1 && cv % 2 == 1) {
    out.delta = 1;
    out.a = u;
    out.counts = {cu, cv};
  }
  return out;
}

// Arrangement of `idx` whose consecutive pairs (0,1), (2,3), ... do not
// cancel, except possibly the last pair when delta = 1. For odd length the
// unpaired index comes last.
std::vector<std::size_t> arrange(const Values& vals, const std::vector<std::size_t>& idx,
                                 PrimeModulus mod) {
  const std::size_t n = idx.size();
  if (n <= 2) return idx;
  auto cancels = [&](std::size_t i, std::size_t j) { return mod.add(vals[i], vals[j]) == 0; };

  Values sub;
  for (auto i : idx) sub.push_back(vals[i]);
  const auto d = classify_values(sub, mod);
  if (d.delta == 1) {
    std::vector<std::size_t> pos, neg, out;
    for (auto i : idx) (vals[i] == *d.a ? pos : neg).push_back(i);
    out.insert(out.end(), pos.begin(), pos.end() - 1);
    out.insert(out.end(), neg.begin(), neg.end() - 1);
    out.push_back(pos.back());
    out.push_back(neg.back());
    return out;
  }

  std::size_t s = n, t = n;
  for (std::size_t i = 0; i < n && s == n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!cancels(idx[i], idx[j])) {
        s = i;
        t = j;
        break;
      }
  const std::size_t is = idx[s], it = idx[t];
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (i != s && i != t) rest.push_back(idx[i]);

  Values rest_vals;
  for (auto i : rest) rest_vals.push_back(vals[i]);
  const auto dr = classify_values(rest_vals, mod);
  std::vector<std::size_t> out;
  if (dr.delta == 0) {
    auto r = arrange(vals, rest, mod);
    const std::size_t paired = r.size() - r.size() % 2;
    out.assign(r.begin(), r.begin() + paired);
    out.push_back(is);
    out.push_back(it);
    if (paired < r.size()) out.push_back(r.back());
    return out;
  }

  const Residue b = *dr.a;
  const Residue nb = mod.neg(b);
  auto in_pair = [&](std::size_t i) { return vals[i] == b || vals[i] == nb; };
  if (!in_pair(is) && !in_pair(it)) {
    std::vector<std::size_t> pos, neg;
    for (auto i : rest) (vals[i] == b ? pos : neg).push_back(i);
    out.insert(out.end(), pos.begin(), pos.end() - 1);
    out.insert(out.end(), neg.begin(), neg.end() - 1);
    out.insert(out.end(), {pos.back(), is, neg.back(), it});
    return out;
  }
  // Exactly one of the stripped pair lies in {b, -b}; it joins its own class,
  // which becomes even, and the other class's leftover pairs with the outsider.
  const std::size_t inside = in_pair(is) ? is : it;
  const std::size_t outside = inside == is ? it : is;
  const Residue c = vals[inside];
  std::vector<std::size_t> same, other;
  for (auto i : rest) (vals[i] == c ? same : other).push_back(i);
  same.push_back(inside);
  out.insert(out.end(), same.begin(), same.end());
  out.insert(out.end(), other.begin(), other.end() - 1);
  out.push_back(other.back());
  out.push_back(outside);
  return out;
}

void check_arity(std::span<const std::int64_t> k, const CoefficientVector& a) {
  if (k.size() != a.size()) throw ArityMismatch("k and a have different lengths");
  if (a.size() > kMaxWitnessArity)
    throw std::invalid_argument("witness arity above " + std::to_string(kMaxWitnessArity));
}

Residue f_values(std::span<const std::int64_t> k, std::span<const Residue> a,
                 std::span<const std::int64_t> x, PrimeModulus mod) {
  const std::size_t n = a.size();
  // t[j][i] = (k_j - x_j)_i a_j^i
  std::array<std::array<Residue, kMaxWitnessArity>, kMaxWitnessArity> t{};
  for (std::size_t j = 0; j < n; ++j) {
    const Residue y = mod.reduce(k[j] - x[j]);
    Residue acc = 1;
    for (std::size_t i = 0; i < n; ++i) {
      t[j][i] = acc;
      acc = mod.mul(acc, mod.mul(mod.sub(y, mod.reduce(static_cast<std::int64_t>(i))), a[j]));
    }
  }
  Residue sum = 0;
  for (const auto& sp : permutations(n)) {
    Residue prod = 1;
    for (std::size_t j = 0; j < n && prod; ++j) prod = mod.mul(prod, t[j][sp.img[j]]);
    sum = sp.sign > 0 ? mod.add(sum, prod) : mod.sub(sum, prod);
  }
  return sum;
}

bool pair_usable(std::span<const std::int64_t> k, std::span<const Residue> a, PrimeModulus mod,
                 std::size_t s, std::size_t t) {
  return mod.add(a[s], a[t]) == 0 && mod.reduce(k[s] + k[t]) != mod.reduce(1);
}

std::optional<std::pair<std::size_t, std::size_t>> first_usable_pair(
    std::span<const std::int64_t> k, std::span<const Residue> a, PrimeModulus mod) {
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = s + 1; t < a.size(); ++t)
      if (pair_usable(k, a, mod, s, t)) return std::pair{s, t};
  return std::nullopt;
}

// Indices (c1, c2, c3, d) of the configuration a = (c, c, c, -c), k = (5, 5, 5, p - 4).
std::optional<std::array<std::size_t, 4>> exceptional_indices(std::span<const std::int64_t> k,
                                                              std::span<const Residue> a,
                                                              PrimeModulus mod) {
  if (a.size() != 4 || mod.value() <= 7) return std::nullopt;
  for (std::size_t d = 0; d < 4; ++d) {
    std::array<std::size_t, 4> idx{};
    std::size_t w = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != d) idx[w++] = i;
    idx[3] = d;
    const Residue c = a[idx[0]];
    bool ok = a[idx[1]] == c && a[idx[2]] == c && a[d] == mod.neg(c) &&
              mod.reduce(k[d]) == mod.reduce(static_cast<std::int64_t>(mod.value()) - 4);
    for (std::size_t j = 0; j < 3 && ok; ++j) ok = mod.reduce(k[idx[j]]) == mod.reduce(5);
    if (ok) return idx;
  }
  return std::nullopt;
}

WitnessCase classify(std::span<const std::int64_t> k, std::span<const Residue> a, PrimeModulus mod,
                     bool strict) {
  if (mod.value() == 2) return WitnessCase::none;
  if (classify_values(a, mod).delta == 0) return WitnessCase::distinct_free;
  if (strict ? (a.size() >= 2 && pair_usable(k, a, mod, 0, 1))
             : first_usable_pair(k, a, mod).has_value())
    return WitnessCase::canceling_pair;
  if (!first_usable_pair(k, a, mod) && exceptional_indices(k, a, mod))
    return WitnessCase::exceptional;
  return WitnessCase::none;
}

// Calls `emit` on each witness the proof's construction yields, in order,
// until `emit` returns true. The first one is the proof's choice; the rest
// come from other prefix witnesses and are only reached when p is too small
// for the degree argument (p < 2n - 2).
bool recurse(std::span<const std::int64_t> k, std::span<const Residue> a, PrimeModulus mod,
             bool strict, const std::function<bool(const WitnessVector&)>& emit) {
  const std::size_t n = a.size();
  if (n == 0) return emit(WitnessVector{});
  if (n == 1) return emit(WitnessVector{0});
  if (n == 2) {
    for (std::int64_t m1 : {0, 1}) {
      WitnessVector m{m1, 1 - m1};
      if (f_values(k, a, m, mod) != 0 && emit(m)) return true;
    }
    return false;
  }

  const auto kind = classify(k, a, mod, strict);
  if (kind == WitnessCase::none) return false;
  if (kind == WitnessCase::exceptional) {
    const auto idx = *exceptional_indices(k, a, mod);
    WitnessVector m(4);
    const std::array<std::int64_t, 4> pattern{0, 2, 3, 1};
    for (std::size_t i = 0; i < 4; ++i) m[idx[i]] = pattern[i];
    return f_values(k, a, m, mod) != 0 && emit(m);
  }

  // tau lists original indices in their new order; the last floor(n/2)
  // pairs (counting from the end) never cancel, apart from the leading
  // canceling pair in case (ii).
  std::vector<std::size_t> tau;
  const Values vals(a.begin(), a.end());
  if (kind == WitnessCase::distinct_free) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    auto r = arrange(vals, all, mod);
    if (n % 2 == 1) {
      tau.push_back(r.back());
      r.pop_back();
    }
    tau.insert(tau.end(), r.begin(), r.end());
  } else {
    const auto [s, t] = strict ? std::pair<std::size_t, std::size_t>{0, 1}
                               : *first_usable_pair(k, a, mod);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (i != s && i != t) rest.push_back(i);
    tau = {s, t};
    auto r = arrange(vals, rest, mod);
    tau.insert(tau.end(), r.begin(), r.end());
  }

  std::vector<std::int64_t> k2(n);
  Values a2(n);
  for (std::size_t i = 0; i < n; ++i) {
    k2[i] = k[tau[i]];
    a2[i] = a[tau[i]];
  }
  const auto top = static_cast<std::int64_t>(2 * n - 3);
  return recurse(std::span(k2).first(n - 2), std::span(a2).first(n - 2), mod,
                 kind == WitnessCase::canceling_pair, [&](const WitnessVector& prefix) {
                   WitnessVector m2 = prefix;
                   m2.resize(n);
                   for (std::int64_t x = 0; x <= top; ++x) {
                     m2[n - 2] = x;
                     m2[n - 1] = top - x;
                     if (f_values(k2, a2, m2, mod) == 0) continue;
                     WitnessVector m(n);
                     for (std::size_t i = 0; i < n; ++i) m[tau[i]] = m2[i];
                     if (emit(m)) return true;
                   }
                   return false;
                 });
}

std::string describe(std::span<const std::int64_t> k, const CoefficientVector& a) {
  std::ostringstream os;
  os << "p=" << a.modulus().value() << " k=(";
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << ") a=(" << a.to_string() << ")";
  return os.str();
}

}  // namespace

DeltaClassification delta_indicator(const CoefficientVector& a) {
  return classify_values(a.values(), a.modulus());
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

int Permutation::sign() const {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) inv += images[i] > images[j];
  return inv % 2 ? -1 : 1;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation pairing_permutation(const CoefficientVector& a) {
  if (a.modulus().value() == 2 && a.size() >= 2)
    throw PreconditionError("no non-canceling pair exists over Z/2Z");
  std::vector<std::size_t> all(a.size());
  std::iota(all.begin(), all.end(), 0);
  Values vals(a.values().begin(), a.values().end());
  return Permutation{arrange(vals, all, a.modulus())};
}

bool pairing_ok(const CoefficientVector& a, const Permutation& sigma) {
  if (sigma.size() != a.size() || !sigma.is_valid()) return false;
  const auto mod = a.modulus();
  const std::size_t need = a.size() / 2 - static_cast<std::size_t>(delta_indicator(a).delta);
  for (std::size_t i = 0; i < need; ++i)
    if (mod.add(a[sigma.images[2 * i]], a[sigma.images[2 * i + 1]]) == 0) return false;
  return true;
}

Residue f_eval(std::span<const std::int64_t> k, const CoefficientVector& a,
               std::span<const std::int64_t> x) {
  check_arity(k, a);
  if (x.size() != a.size()) throw ArityMismatch("x and a have different lengths");
  return f_values(k, a.values(), x, a.modulus());
}

WitnessCase classify_witness_case(std::span<const std::int64_t> k, const CoefficientVector& a,
                                  const WitnessOptions& opts) {
  check_arity(k, a);
  return classify(k, a.values(), a.modulus(), opts.strict_pair);
}

std::optional<WitnessVector> find_witness_recursive(std::span<const std::int64_t> k,
                                                    const CoefficientVector& a,
                                                    const WitnessOptions& opts) {
  check_arity(k, a);
  std::optional<WitnessVector> found;
  recurse(k, a.values(), a.modulus(), opts.strict_pair, [&](const WitnessVector& m) {
    found = m;
    return true;
  });
  return found;
}

std::optional<WitnessVector> find_witness_brute_force(std::span<const std::int64_t> k,
                                                      const CoefficientVector& a) {
  check_arity(k, a);
  const std::size_t n = a.size();
  const auto cap = std::max<std::int64_t>(2 * static_cast<std::int64_t>(n) - 3, 0);
  const auto target = choose2(static_cast<std::int64_t>(n));
  WitnessVector m(n, 0);
  // Odometer over [0, cap]^n keeping only vectors with the right sum.
  while (true) {
    if (std::accumulate(m.begin(), m.end(), std::int64_t{0}) == target &&
        f_values(k, a.values(), m, a.modulus()) != 0)
      return m;
    std::size_t d = n;
    while (d > 0 && m[d - 1] == cap) m[--d] = 0;
    if (d == 0) return std::nullopt;
    ++m[d - 1];
  }
}

bool witness_ok(std::span<const std::int64_t> k, const CoefficientVector& a,
                std::span<const std::int64_t> m) {
  const auto n = static_cast<std::int64_t>(a.size());
  if (m.size() != a.size()) return false;
  const auto cap = std::max<std::int64_t>(2 * n - 3, 0);
  std::int64_t sum = 0;
  for (auto v : m) {
    if (v < 0 || v > cap) return false;
    sum += v;
  }
  return sum == choose2(n) && f_eval(k, a, m) != 0;
}

WitnessVector find_witness(std::span<const std::int64_t> k, const CoefficientVector& a,
                           const WitnessOptions& opts) {
  check_arity(k, a);
  if (a.modulus().value() == 2) throw PreconditionError("witness search needs p odd");
  // The last coordinate is found by scanning 2n-2 integers; they must be
  // distinct mod p for the degree argument to apply.
  if (a.modulus().value() + 2 < 2 * a.size())
    throw PreconditionError("witness search needs p >= 2n - 2 for " + describe(k, a));
  if (classify_witness_case(k, a, opts) == WitnessCase::none)
    throw PreconditionError("no witness hypothesis holds for " + describe(k, a));
  auto rec = find_witness_recursive(k, a, opts);
  auto brute = find_witness_brute_force(k, a);
  if (rec.has_value() != brute.has_value())
    throw WitnessDisagreement(std::string(rec ? "recursion found a witness, brute force did not"
                                              : "brute force found a witness, recursion did not") +
                              " for " + describe(k, a));
  if (!rec) throw WitnessNotFound("no witness vector exists for " + describe(k, a));
  if (!witness_ok(k, a, *rec)) throw std::logic_error("recursive witness fails verification");
  return *rec;
}

Lemma23Result lemma_2_3_classify(std::span<const std::int64_t> k, const CoefficientVector& a) {
  check_arity(k, a);
  const auto mod = a.modulus();
  const auto n = static_cast<std::int64_t>(a.size());
  if (n < 4) throw PreconditionError("classification needs n >= 4");
  if (mod.value() == 2) throw PreconditionError("classification needs p odd");
  if (delta_indicator(a).delta != 1) throw PreconditionError("classification needs delta = 1");
  std::int64_t ksum = 0;
  for (auto v : k) {
    if (v < 2 * n - 3) throw PreconditionError("classification needs every k_i >= 2n-3");
    ksum += v;
  }
  if (static_cast<std::int64_t>(mod.value()) < ksum - n * n + n + 1)
    throw PreconditionError("classification needs p >= sum k - n^2 + n + 1");
  if (auto st = first_usable_pair(k, a.values(), mod)) return CancelingPair{st->first, st->second};
  if (n == 4) return ExceptionalCase{};
  throw std::logic_error("no usable canceling pair for n > 4: " + describe(k, a));
}

std::optional<std::vector<Residue>> cn_witness_search(const ModPolynomial& P, const SetFamily& A) {
  if (P.arity() != A.arity()) throw ArityMismatch("polynomial and set family arity differ");
  if (!(P.ring().modulus() == A.modulus()))
    throw ModulusMismatch("polynomial and set family over different fields");
  const std::size_t n = A.arity();
  std::vector<std::size_t> pos(n, 0);
  std::vector<Residue> x(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = A[i][pos[i]];
    if (P.evaluate(x) != 0) return x;
    std::size_t d = n;
    while (d > 0 && pos[d - 1] + 1 == A[d - 1].size()) pos[--d] = 0;
    if (d == 0) return std::nullopt;
    ++pos[d - 1];
  }
}

std::optional<ExponentVector> nullstellensatz_exponent(const ModPolynomial& P,
                                                       std::span<const std::size_t> sizes) {
  if (sizes.size() != P.arity()) throw ArityMismatch("sizes and polynomial arity differ");
  if (P.is_zero()) return std::nullopt;
  const auto top = P.top_degree_part();
  for (const auto& [e, c] : top.terms()) {
    bool fits = true;
    for (std::size_t i = 0; i < sizes.size() && fits; ++i) fits = e[i] < sizes[i];
    if (fits) return e;
  }
  return std::nullopt;
}

CertificateSides certificate_distinct_sum(std::span<const std::size_t> sizes,
                                          const CoefficientVector& a,
                                          std::span<const std::int64_t> m, std::size_t term_cap) {
  const std::size_t n = sizes.size();
  if (a.size() != n || m.size() != n) throw ArityMismatch("sizes, a and m differ in length");
  if (n > kMaxWitnessArity) throw std::invalid_argument("certificate arity too large");
  const auto mod = a.modulus();
  const auto p = static_cast<std::int64_t>(mod.value());
  const auto nn = static_cast<std::int64_t>(n);
  std::int64_t msum = 0, size_sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto s = static_cast<std::int64_t>(sizes[j]);
    if (m[j] < 0 || m[j] > s - 1) throw PreconditionError("need 0 <= m_j <= |A_j| - 1");
    if (s - 1 - m[j] >= p) throw PreconditionError("need |A_j| - 1 - m_j < p");
    msum += m[j];
    size_sum += s;
  }
  if (msum != choose2(nn)) throw PreconditionError("need sum m = C(n,2)");
  const auto N = size_sum - nn * nn;
  if (N < 0 || N >= p) throw PreconditionError("need 0 <= N < p");

  const ModRing ring(mod);
  std::vector<Residue> b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = mod.inv(a[j]);

  auto prod = ModPolynomial::constant(ring, n, 1);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      auto f = ModPolynomial::variable(ring, n, j).scaled(b[j]) -
               ModPolynomial::variable(ring, n, i).scaled(b[i]);
      prod = multiply(prod, f, term_cap);
    }
  ExponentVector em(std::vector<std::uint32_t>(m.begin(), m.end()));
  prod = multiply(prod, ModPolynomial::monomial(ring, em, 1), term_cap);
  prod = multiply(prod, power(linear_sum(ring, n), static_cast<std::uint64_t>(N), term_cap),
                  term_cap);

  ExponentVector target = ExponentVector::zeros(n);
  Residue scale = 1;
  std::vector<std::int64_t> k(n);
  for (std::size_t j = 0; j < n; ++j) {
    target[j] = static_cast<std::uint32_t>(sizes[j] - 1);
    k[j] = static_cast<std::int64_t>(sizes[j]) - 1;
    scale = mod.mul(scale, factorial(static_cast<std::uint64_t>(k[j] - m[j]), mod).value());
  }
  CertificateSides out;
  out.lhs = mod.mul(scale, prod.coefficient(target));
  const CoefficientVector bv(mod, b);
  out.rhs = mod.mul(factorial(static_cast<std::uint64_t>(N), mod).value(), f_eval(k, bv, m));
  return out;
}

CertificateSides certificate_polynomial_sum(const ModPolynomial& P,
                                            std::span<const std::int64_t> m,
                                            std::size_t term_cap) {
  const std::size_t n = P.arity();
  if (m.size() != n) throw ArityMismatch("m and polynomial arity differ");
  if (P.is_zero()) throw PreconditionError("certificate needs P nonzero");
  const auto mod = P.ring().modulus();
  const auto p = static_cast<std::int64_t>(mod.value());
  std::int64_t msum = 0;
  for (auto v : m) {
    if (v < 0 || v >= p) throw PreconditionError("need 0 <= m_i < p");
    msum += v;
  }
  const auto M = msum - P.total_degree();
  if (M < 0 || M >= p) throw PreconditionError("need 0 <= M < p");

  const ModRing ring(mod);
  auto prod = multiply(P, power(linear_sum(ring, n), static_cast<std::uint64_t>(M), term_cap),
                       term_cap);
  ExponentVector em(std::vector<std::uint32_t>(m.begin(), m.end()));
  Residue scale = 1;
  std::vector<Residue> point(n);
  for (std::size_t i = 0; i < n; ++i) {
    scale = mod.mul(scale, factorial(static_cast<std::uint64_t>(m[i]), mod).value());
    point[i] = mod.reduce(m[i]);
  }
  CertificateSides out;
  out.lhs = mod.mul(scale, prod.coefficient(em));
  out.rhs = mod.mul(factorial(static_cast<std::uint64_t>(M), mod).value(),
                    pstar_transform(P).evaluate(point));
  return out;
}

}  // namespace rsum
