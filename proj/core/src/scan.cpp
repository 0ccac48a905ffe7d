#include "rsum/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rsum/poly.hpp"
#include "rsum/subsets.hpp"
#include "rsum/sumset.hpp"

namespace rsum {

namespace {

constexpr std::uint32_t kMaxFamilyPrime = 19;  // 2^p-entry table per worker
constexpr std::uint32_t kMaxCommonPrime = 23;

// --- small utilities --------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::initializer_list<std::uint64_t> key) {
    std::vector<std::uint32_t> words;
    for (auto k : key) {
      words.push_back(static_cast<std::uint32_t>(k));
      words.push_back(static_cast<std::uint32_t>(k >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    gen_.seed(seq);
  }
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  Residue nonzero(PrimeModulus mod) { return static_cast<Residue>(1 + below(mod.value() - 1)); }

 private:
  std::mt19937_64 gen_;
};

std::string join(const auto& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string family_string(const std::vector<SubsetMask>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) s += ';';
    s += join(mask_elements(sets[i]), ",");
  }
  return s;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += c;
    }
  }
  return out + "\"";
}

std::string csv_field(const std::string& s, bool force_quote) {
  if (!force_quote && s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

SubsetMask rotate(SubsetMask s, std::uint32_t t, std::uint32_t p, SubsetMask full) {
  if (t == 0) return s;
  return ((s << t) | (s >> (p - t))) & full;
}

// --- problems ---------------------------------------------------------------

struct Problem {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::uint32_t k = 1;
  std::optional<std::size_t> instance;
  std::vector<Residue> coeffs;
  std::optional<ModPolynomial> g;
  Restriction restriction = Restriction::none();
  bool expand_permutations = false;
  std::string label;
  bool common = false;
  bool equal_sizes = false;
  SetSymmetry sym = SetSymmetry::none;
  /// First sets are orbit representatives mapped through x -> x^conj.
  std::uint32_t conj = 1;
  std::vector<ExponentVector> tops;
  std::int64_t deg_p = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> m_i;
  std::optional<std::vector<SubsetMask>> fixed;
  std::vector<std::pair<std::string, std::string>> extra;

  ValuePolynomial value_map() const {
    CoefficientVector a(PrimeModulus(p), coeffs);
    return g ? ValuePolynomial(k, a, *g) : ValuePolynomial(k, a);
  }
};

ModPolynomial zero_poly(PrimeModulus mod, std::size_t n) { return ModPolynomial(ModRing(mod), n); }

ExponentVector random_monomial(Rng& rng, std::size_t n, std::uint32_t d) {
  auto e = ExponentVector::zeros(n);
  for (std::uint32_t t = 0; t < d; ++t) ++e[rng.below(n)];
  return e;
}

ModPolynomial random_poly(Rng& rng, PrimeModulus mod, std::size_t n, std::uint32_t max_deg) {
  while (true) {
    auto P = zero_poly(mod, n);
    const auto d = static_cast<std::uint32_t>(rng.below(max_deg + 1));
    P.add_term(random_monomial(rng, n, d), rng.nonzero(mod));
    const auto extra_terms = rng.below(4);
    for (std::uint64_t t = 0; t < extra_terms; ++t)
      P.add_term(random_monomial(rng, n, static_cast<std::uint32_t>(rng.below(d + 1))),
                 rng.nonzero(mod));
    if (!P.is_zero()) return P;
  }
}

/// Random g with deg g < k (a constant when k = 1).
ModPolynomial random_lower(Rng& rng, PrimeModulus mod, std::size_t n, std::uint32_t k) {
  auto g = zero_poly(mod, n);
  const auto terms = rng.below(4);
  for (std::uint64_t t = 0; t < terms; ++t)
    g.add_term(random_monomial(rng, n, static_cast<std::uint32_t>(rng.below(k))),
               static_cast<Residue>(rng.below(mod.value())));
  return g;
}

std::vector<Residue> random_subset(Rng& rng, PrimeModulus mod, std::size_t size) {
  std::vector<Residue> all(mod.value());
  std::iota(all.begin(), all.end(), Residue{0});
  for (std::size_t i = 0; i < size && i < all.size(); ++i)
    std::swap(all[i], all[i + rng.below(all.size() - i)]);
  all.resize(std::min<std::size_t>(size, all.size()));
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Residue> random_coeffs(Rng& rng, PrimeModulus mod, std::size_t n) {
  std::vector<Residue> a(n);
  for (auto& x : a) x = rng.nonzero(mod);
  return a;
}

bool is_value_theorem(TheoremId id) { return theorem_family(id) == Family::value_set; }

bool has_polynomial(TheoremId id) { return id == TheoremId::thm1_3 || id == TheoremId::thm5_2; }

bool uses_distinct(TheoremId id) {
  switch (id) {
    case TheoremId::cd:
    case TheoremId::thm5_1i:
      return false;
    default:
      return true;
  }
}

bool needs_random(TheoremId id) {
  return id == TheoremId::cor1_2f || id == TheoremId::cor1_2d || id == TheoremId::cor1_3;
}

void set_polynomial(Problem& pr, const ModPolynomial& P) {
  pr.deg_p = P.total_degree();
  const auto top = P.top_degree_part();
  for (const auto& [e, c] : top.terms()) pr.tops.push_back(e);
  pr.label = "P:" + to_string(P);
  if (pr.n == 2) {
    pr.restriction = Restriction::pairwise(
        2, PrimeModulus(pr.p),
        [P](std::size_t, std::size_t, Residue x, Residue y) {
          const std::array<Residue, 2> v{x, y};
          return P.evaluate(v) != 0;
        },
        pr.label);
  } else {
    pr.restriction = Restriction::polynomial(P);
  }
  std::ostringstream text;
  write_polynomial(text, P);
  pr.extra.emplace_back("P", json_escape(text.str()));
}

std::string avoid_label(const std::vector<std::vector<std::vector<Residue>>>& S) {
  std::string s = "S:";
  bool first = true;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S[i].size(); ++j) {
      if (S[i][j].empty()) continue;
      if (!first) s += ';';
      first = false;
      s += std::to_string(i + 1) + std::to_string(j + 1) + "={" + join(S[i][j], " ") + "}";
    }
  if (first) s += "{}";
  return s;
}

/// Restriction and its parameters for one random instance of the
/// corollaries whose side condition is not a polynomial given up front.
void random_side_condition(Problem& pr, TheoremId id, Rng& rng, std::int64_t m) {
  const PrimeModulus mod(pr.p);
  const auto n = pr.n;
  if (id == TheoremId::cor1_2f) {
    std::vector<Residue> f(static_cast<std::size_t>(m) + 1);
    for (auto& c : f) c = static_cast<Residue>(rng.below(pr.p));
    f.back() = rng.nonzero(mod);
    pr.m = m;
    pr.restriction = distinct_images(mod, n, f);
    pr.label = "f:" + join(f, " ");
    return;
  }
  std::vector<std::vector<std::vector<Residue>>> S(n, std::vector<std::vector<Residue>>(n));
  if (id == TheoremId::cor1_2d) {
    pr.m = m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        S[i][j] = random_subset(rng, mod, rng.below(static_cast<std::uint64_t>(2 * m)));
  } else {
    pr.m_i.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        S[i][j] = random_subset(rng, mod, rng.below(3));
        pr.m_i[i] = std::max<std::int64_t>(pr.m_i[i], static_cast<std::int64_t>(S[i][j].size()));
      }
  }
  pr.restriction = avoid_differences(mod, S);
  pr.label = avoid_label(S);
}

std::vector<std::vector<Residue>> coefficient_list(const ScanConfig& cfg, PrimeModulus mod,
                                                   CoeffMode mode, bool permutable,
                                                   bool& expand) {
  expand = false;
  const auto n = cfg.n;
  switch (mode) {
    case CoeffMode::ones:
      return {std::vector<Residue>(n, 1)};
    case CoeffMode::all:
      return all_coefficient_vectors(n, mod);
    case CoeffMode::explicit_: {
      std::vector<Residue> a;
      for (auto v : cfg.explicit_coeffs) {
        const auto r = mod.reduce(v);
        if (r == 0) throw std::invalid_argument("coefficients must be nonzero mod " + std::to_string(mod.value()));
        a.push_back(r);
      }
      return {a};
    }
    case CoeffMode::canonical: {
      if (permutable) {
        expand = true;
        return coefficient_classes(n, mod);
      }
      auto all = all_coefficient_vectors(n, mod);
      std::erase_if(all, [](const auto& a) { return a[0] != 1; });
      return all;
    }
    case CoeffMode::random:
      break;
  }
  throw std::logic_error("random coefficients are drawn per instance");
}

std::vector<Problem> build_problems(const ScanConfig& cfg) {
  const auto id = cfg.theorem;
  const bool value = is_value_theorem(id);
  std::vector<Problem> out;
  const std::vector<std::uint32_t> unit_k{1};
  const auto& ks = value ? cfg.ks : unit_k;
  const std::vector<std::int64_t> no_m{0};
  const bool uses_m = id == TheoremId::cor1_2f || id == TheoremId::cor1_2d;
  const auto& ms = uses_m ? cfg.ms : no_m;

  std::optional<ModPolynomial> fixed_poly;
  for (auto p : cfg.primes) {
    const PrimeModulus mod(p);
    if (cfg.poly_text && has_polynomial(id)) {
      fixed_poly = parse_mod_polynomial(*cfg.poly_text);
      if (!(fixed_poly->ring().modulus() == mod))
        throw std::invalid_argument("--poly modulus does not match --p " + std::to_string(p));
      if (fixed_poly->arity() != cfg.n) throw std::invalid_argument("--poly arity does not match --n");
      if (fixed_poly->is_zero()) throw std::invalid_argument("--poly is the zero polynomial");
    }
    std::optional<std::vector<SubsetMask>> fixed;
    if (cfg.sets) {
      auto fam = SetFamily::parse(*cfg.sets, mod, cfg.n);
      std::vector<SubsetMask> masks;
      for (const auto& s : fam.sets()) masks.push_back(elements_mask(s));
      fixed = masks;
    }

    for (auto k : ks) {
      auto base = [&] {
        Problem pr;
        pr.p = p;
        pr.n = cfg.n;
        pr.k = k;
        pr.common = needs_common_set(id);
        pr.equal_sizes = id == TheoremId::cor5_2;
        pr.fixed = fixed;
        pr.restriction = uses_distinct(id) ? Restriction::distinct() : Restriction::none();
        pr.label = pr.restriction.label();
        return pr;
      };
      auto finish = [&](Problem pr) {
        if (pr.g && pr.g->is_zero()) pr.g.reset();
        const bool plain = !pr.g && pr.tops.empty() &&
                           (pr.restriction.kind() == Restriction::Kind::none ||
                            pr.restriction.kind() == Restriction::Kind::distinct);
        if (cfg.canonicalize && plain) {
          // x -> x^k is a bijection when gcd(k, p - 1) = 1, so the affine
          // group acts through it.
          pr.sym = SetSymmetry::dilation;
          if (std::gcd(pr.k, p - 1) == 1) {
            pr.sym = SetSymmetry::affine;
            while (static_cast<std::uint64_t>(pr.conj) * pr.k % (p - 1) != 1 % (p - 1)) ++pr.conj;
          }
        }
        if (value) pr.label = "k=" + std::to_string(pr.k) + ";" + pr.label;
        if (pr.g) pr.label += ";g:" + to_string(*pr.g);
        if (pr.g) {
          std::ostringstream text;
          write_polynomial(text, *pr.g);
          pr.extra.emplace_back("g", json_escape(text.str()));
        }
        out.push_back(std::move(pr));
      };

      if (cfg.random > 0) {
        for (std::size_t mi = 0; mi < ms.size(); ++mi)
          for (std::size_t r = 0; r < cfg.random; ++r) {
            auto pr = base();
            const auto index = mi * cfg.random + r;
            pr.instance = index;
            Rng rng{cfg.seed, p, cfg.n, k, static_cast<std::uint64_t>(ms[mi]), r,
                    static_cast<std::uint64_t>(id)};
            if (id == TheoremId::thm1_3)
              pr.coeffs.assign(cfg.n, 1);
            else if (cfg.coeffs == CoeffMode::explicit_ || cfg.coeffs == CoeffMode::ones) {
              bool unused = false;
              pr.coeffs = coefficient_list(cfg, mod, cfg.coeffs, false, unused).front();
            } else
              pr.coeffs = random_coeffs(rng, mod, cfg.n);
            if (has_polynomial(id)) set_polynomial(pr, random_poly(rng, mod, cfg.n, cfg.max_deg));
            if (needs_random(id)) random_side_condition(pr, id, rng, ms[mi]);
            if (value) pr.g = random_lower(rng, mod, cfg.n, k);
            finish(std::move(pr));
          }
        continue;
      }

      const bool permutable = !has_polynomial(id) && !needs_random(id);
      auto mode = cfg.coeffs;
      if (id == TheoremId::thm1_3) mode = CoeffMode::ones;
      bool expand = false;
      auto list = coefficient_list(cfg, mod, mode, permutable, expand);
      if (mode == CoeffMode::canonical && id == TheoremId::thm5_1i && !cfg.sets)
        list = power_coefficient_classes(cfg.n, mod, k);
      for (auto& a : list) {
        auto pr = base();
        pr.coeffs = std::move(a);
        pr.expand_permutations = expand;
        if (fixed_poly) set_polynomial(pr, *fixed_poly);
        finish(std::move(pr));
      }
    }
  }
  return out;
}

// --- bound inputs and rows ---------------------------------------------------

BoundInput bound_input(const Problem& pr, TheoremId id, const std::vector<std::int64_t>& sizes) {
  BoundInput in;
  in.p = pr.p;
  in.n = pr.n;
  in.sizes = sizes;
  in.coeffs = pr.coeffs;
  in.k = pr.k;
  in.deg_p = pr.deg_p;
  in.m = pr.m;
  in.m_i = pr.m_i;
  std::optional<std::int64_t> best;
  for (const auto& e : pr.tops) {
    bool fits = true;
    for (std::size_t i = 0; i < pr.n; ++i) fits = fits && static_cast<std::int64_t>(e[i]) < sizes[i];
    if (!fits) continue;
    BoundInput trial = in;
    trial.top_exponents = std::vector<std::int64_t>(e.values().begin(), e.values().end());
    if (id != TheoremId::thm5_2) return trial;
    auto b = evaluate_bound(id, trial);
    if (b && (!best || *b > *best)) {
      best = b;
      in.top_exponents = trial.top_exponents;
    }
  }
  return in;
}

struct Best {
  std::int64_t card = 0;
  std::vector<SubsetMask> sets;
};
using SizeKey = std::vector<std::int64_t>;
using ItemResult = std::map<SizeKey, Best>;

void offer(ItemResult& r, SizeKey key, std::int64_t card, const std::vector<SubsetMask>& sets) {
  auto it = r.find(key);
  if (it == r.end())
    r.emplace(std::move(key), Best{card, sets});
  else if (card < it->second.card)
    it->second = Best{card, sets};
}

std::vector<ScanRow> rows_for(const Problem& pr, TheoremId id, const ItemResult& merged) {
  std::map<std::pair<std::vector<Residue>, SizeKey>, ScanRow> rows;
  std::vector<std::size_t> perm(pr.n);
  for (const auto& [sizes, best] : merged) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::vector<Residue> a(pr.n);
      SizeKey s(pr.n);
      std::vector<SubsetMask> fam(pr.n);
      for (std::size_t i = 0; i < pr.n; ++i) {
        a[i] = pr.coeffs[perm[i]];
        s[i] = sizes[perm[i]];
        fam[i] = best.sets[perm[i]];
      }
      auto key = std::make_pair(a, s);
      if (rows.count(key)) continue;
      Problem view;
      view.p = pr.p;
      view.n = pr.n;
      view.k = pr.k;
      view.coeffs = a;
      view.tops = pr.tops;
      view.deg_p = pr.deg_p;
      view.m = pr.m;
      view.m_i = pr.m_i;
      const auto in = bound_input(view, id, s);
      ScanRow row;
      row.report = make_report(id, in, best.card, pr.label);
      row.k = pr.k;
      row.instance = pr.instance;
      row.family = family_string(fam);
      row.extra = pr.extra;
      if (in.top_exponents) row.extra.emplace_back("top_exponents", "[" + join(*in.top_exponents, ",") + "]");
      if (id == TheoremId::thm1_2) {
        row.extra.emplace_back("penalty_statement", opposite_pair_penalty(a, pr.p) ? "1" : "0");
        row.extra.emplace_back("penalty_proof", equal_pair_penalty(a) ? "1" : "0");
      }
      if (id == TheoremId::cor1_3) row.extra.emplace_back("m_i", "[" + join(pr.m_i, ",") + "]");
      rows.emplace(std::move(key), std::move(row));
    } while (pr.expand_permutations && std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<ScanRow> out;
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

// --- enumeration ---------------------------------------------------------------

struct Lists {
  std::vector<SubsetMask> all;  // every subset in the size range
  std::map<std::pair<SetSymmetry, std::uint32_t>, std::vector<SubsetMask>> firsts;
};

struct Context {
  const Problem* pr = nullptr;
  const Lists* lists = nullptr;
  std::uint32_t lo = 1, hi = 1;
  bool fast = false;
  std::vector<std::vector<Residue>> h;               // fast path value tables
  std::vector<std::vector<SubsetMask>> allow_last;  // [i][x]: v allowed at the last slot
  std::optional<ValuePolynomial> f;
};

std::int64_t family_card(const Context& ctx, const std::vector<SubsetMask>& sets) {
  std::vector<std::vector<Residue>> elems;
  for (auto s : sets) elems.push_back(mask_elements(s));
  const SetFamily A(PrimeModulus(ctx.pr->p), std::move(elems));
  return static_cast<std::int64_t>(restricted_value_set(*ctx.f, A, ctx.pr->restriction).size());
}

SizeKey key_of(const std::vector<SubsetMask>& sets) {
  SizeKey k;
  for (auto s : sets) k.push_back(std::popcount(s));
  return k;
}

void generic_item(const Context& ctx, SubsetMask first, ItemResult& out) {
  const auto& pr = *ctx.pr;
  if (pr.fixed) {
    offer(out, key_of(*pr.fixed), family_card(ctx, *pr.fixed), *pr.fixed);
    return;
  }
  std::vector<SubsetMask> sets(pr.n, first);
  if (pr.common || pr.n == 1) {
    offer(out, key_of(sets), family_card(ctx, sets), sets);
    return;
  }
  std::vector<SubsetMask> rest = ctx.lists->all;
  if (pr.equal_sizes)
    std::erase_if(rest, [&](SubsetMask s) { return std::popcount(s) != std::popcount(first); });
  if (rest.empty()) return;
  std::vector<std::size_t> idx(pr.n - 1, 0);
  while (true) {
    for (std::size_t i = 1; i < pr.n; ++i) sets[i] = rest[idx[i - 1]];
    offer(out, key_of(sets), family_card(ctx, sets), sets);
    std::size_t d = idx.size();
    while (d > 0 && idx[d - 1] + 1 == rest.size()) idx[--d] = 0;
    if (d == 0) return;
    ++idx[d - 1];
  }
}

struct FastScratch {
  std::vector<SubsetMask> U, low, low_sorted;
  std::vector<std::size_t> low_order, bucket;
  std::uint32_t bits = ~0U;

  void prepare(std::uint32_t b) {
    if (b == bits) return;
    bits = b;
    const std::size_t count = std::size_t{1} << b;
    low.assign(count, 0);
    low_sorted.assign(count, 0);
    low_order.resize(count);
    std::iota(low_order.begin(), low_order.end(), std::size_t{0});
    std::stable_sort(low_order.begin(), low_order.end(),
                     [](std::size_t x, std::size_t y) { return std::popcount(x) < std::popcount(y); });
    bucket.assign(b + 2, 0);
    for (std::size_t L = 0; L < count; ++L) ++bucket[std::popcount(L) + 1];
    for (std::uint32_t j = 1; j < b + 2; ++j) bucket[j] += bucket[j - 1];
  }
};

void fast_item(const Context& ctx, SubsetMask first, ItemResult& out, FastScratch& scratch) {
  const auto& pr = *ctx.pr;
  const auto p = pr.p;
  const auto n = pr.n;
  const SubsetMask full = (SubsetMask{1} << p) - 1;
  const auto first_size = static_cast<std::uint32_t>(std::popcount(first));

  std::vector<SubsetMask> mids = ctx.lists->all;
  if (pr.equal_sizes)
    std::erase_if(mids, [&](SubsetMask s) { return std::popcount(s) != static_cast<int>(first_size); });
  std::vector<std::vector<Residue>> mid_elems;
  for (auto s : mids) mid_elems.push_back(mask_elements(s));
  const auto first_elems = mask_elements(first);
  if (n > 2 && mids.empty()) return;

  const std::uint32_t low_bits = p / 2;
  const std::size_t low_count = std::size_t{1} << low_bits;
  const std::size_t high_count = std::size_t{1} << (p - low_bits);
  const auto lo = ctx.lo, hi = ctx.hi;
  const bool equal = pr.equal_sizes;
  scratch.prepare(low_bits);
  auto& U = scratch.U;
  U.assign(high_count, 0);
  std::vector<SubsetMask> D(p), R(p);
  std::vector<const std::vector<Residue>*> prefix(n - 1);
  std::vector<Residue> x(n - 1);
  prefix[0] = &first_elems;
  const auto kind = pr.restriction.kind();

  struct Slot {
    std::int64_t card = -1;
    SubsetMask set = 0;
  };
  std::vector<Slot> best(p + 1);
  std::vector<std::size_t> idx(n - 2, 0);
  std::vector<SubsetMask> sets(n);
  sets[0] = first;

  auto walk = [&](auto&& self, std::size_t i, Residue sum, SubsetMask allowed) -> void {
    if (i == n - 1) {
      const SubsetMask bit = SubsetMask{1} << sum;
      for (SubsetMask a = allowed; a; a &= a - 1) D[std::countr_zero(a)] |= bit;
      return;
    }
    for (auto xi : *prefix[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = pr.restriction.pair_allowed(j, i, x[j], xi);
      if (!ok) continue;
      x[i] = xi;
      SubsetMask next = allowed;
      if (kind == Restriction::Kind::distinct)
        next &= ~(SubsetMask{1} << xi);
      else if (kind == Restriction::Kind::pairwise)
        next &= ctx.allow_last[i][xi];
      if (!next) continue;
      Residue s = sum + ctx.h[i][xi];
      if (s >= p) s -= p;
      self(self, i + 1, s, next);
    }
  };

  while (true) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      prefix[i] = &mid_elems[idx[i - 1]];
      sets[i] = mids[idx[i - 1]];
    }
    std::fill(D.begin(), D.end(), 0);
    walk(walk, 0, 0, full);
    for (std::uint32_t v = 0; v < p; ++v) R[v] = rotate(D[v], ctx.h[n - 1][v], p, full);

    // Last set S = (H << b) | L: U(S) = Uh[H] | Ul[L], with L grouped by size.
    for (auto& b : best) b = Slot{};
    for (std::size_t L = 1; L < low_count; ++L)
      scratch.low[L] = scratch.low[L & (L - 1)] | R[std::countr_zero(L)];
    for (std::size_t i = 0; i < low_count; ++i) scratch.low_sorted[i] = scratch.low[scratch.low_order[i]];
    for (std::size_t H = 1; H < high_count; ++H)
      U[H] = U[H & (H - 1)] | R[low_bits + std::countr_zero(H)];
    for (std::size_t H = 0; H < high_count; ++H) {
      const auto h = static_cast<std::uint32_t>(std::popcount(H));
      const SubsetMask uh = U[H];
      for (std::uint32_t j = 0; j <= low_bits; ++j) {
        const auto c = h + j;
        if (c < lo || c > hi || (equal && c != first_size)) continue;
        int m = 65;
        std::size_t arg = 0;
        const auto* vals = scratch.low_sorted.data();
        for (std::size_t i = scratch.bucket[j]; i < scratch.bucket[j + 1]; ++i) {
          const int v = std::popcount(uh | vals[i]);
          if (v < m) {
            m = v;
            arg = i;
          }
        }
        if (best[c].card < 0 || m < best[c].card)
          best[c] = Slot{m, (SubsetMask{H} << low_bits) | scratch.low_order[arg]};
      }
    }
    for (std::uint32_t c = 0; c <= p; ++c) {
      if (best[c].card < 0) continue;
      sets[n - 1] = best[c].set;
      offer(out, key_of(sets), best[c].card, sets);
    }

    std::size_t d = idx.size();
    while (d > 0 && idx[d - 1] + 1 == mids.size()) idx[--d] = 0;
    if (d == 0) return;
    ++idx[d - 1];
  }
}

bool fast_eligible(const Problem& pr) {
  if (pr.fixed || pr.common || pr.n < 2 || pr.p > kMaxFamilyPrime) return false;
  if (pr.restriction.kind() == Restriction::Kind::polynomial) return false;
  return !pr.g || pr.value_map().separable();
}

}  // namespace

// --- public API --------------------------------------------------------------

CoeffMode parse_coeff_mode(const std::string& s) {
  if (s == "ones") return CoeffMode::ones;
  if (s == "all") return CoeffMode::all;
  if (s == "canonical") return CoeffMode::canonical;
  if (s == "random") return CoeffMode::random;
  throw std::invalid_argument("unknown coefficient mode '" + s + "'");
}

std::string_view to_string(CoeffMode m) {
  switch (m) {
    case CoeffMode::ones:
      return "ones";
    case CoeffMode::all:
      return "all";
    case CoeffMode::canonical:
      return "canonical";
    case CoeffMode::random:
      return "random";
    case CoeffMode::explicit_:
      return "explicit";
  }
  return "?";
}

CoeffMode default_coeff_mode(TheoremId id, bool random) {
  switch (id) {
    case TheoremId::cd:
    case TheoremId::dh:
    case TheoremId::anr:
    case TheoremId::thm1_3:
      return CoeffMode::ones;
    default:
      return random ? CoeffMode::random : CoeffMode::canonical;
  }
}

void validate(const ScanConfig& cfg) {
  if (cfg.primes.empty()) throw std::invalid_argument("--p: at least one prime is required");
  for (auto p : cfg.primes)
    if (!is_prime(p)) throw std::invalid_argument("--p: " + std::to_string(p) + " is not prime");
  if (cfg.n < 1) throw std::invalid_argument("--n must be at least 1");
  if (cfg.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
  if (cfg.size_lo < 1) throw std::invalid_argument("--sizes: lower end must be at least 1");
  if (cfg.size_hi && cfg.size_hi < cfg.size_lo) throw std::invalid_argument("--sizes: empty range");
  if (cfg.ks.empty()) throw std::invalid_argument("--k: at least one value is required");
  for (auto k : cfg.ks)
    if (k < 1) throw std::invalid_argument("--k values must be at least 1");
  if (cfg.coeffs == CoeffMode::explicit_ && cfg.explicit_coeffs.size() != cfg.n)
    throw std::invalid_argument("--coeffs: expected " + std::to_string(cfg.n) + " coefficients");
  if (cfg.coeffs == CoeffMode::random && cfg.random == 0)
    throw std::invalid_argument("--coeffs random needs --random N");
  if (needs_random(cfg.theorem) && cfg.random == 0)
    throw std::invalid_argument("--random: " + std::string(to_string(cfg.theorem)) +
                                " draws its side condition at random and needs --random N");
  if (has_polynomial(cfg.theorem) && cfg.random == 0 && !cfg.poly_text)
    throw std::invalid_argument("--poly: " + std::string(to_string(cfg.theorem)) +
                                " needs --poly FILE or --random N");
  if (cfg.theorem == TheoremId::cor1_2f || cfg.theorem == TheoremId::cor1_2d) {
    if (cfg.ms.empty()) throw std::invalid_argument("--m: at least one value is required");
    for (auto m : cfg.ms)
      if (m < 0) throw std::invalid_argument("--m values must be non-negative");
  }
  for (auto p : cfg.primes) {
    const std::uint32_t limit = needs_common_set(cfg.theorem) ? kMaxCommonPrime : kMaxFamilyPrime;
    if (!cfg.sets && p > limit)
      throw std::invalid_argument("--p: exhaustive scans of " + std::string(to_string(cfg.theorem)) +
                                  " support p <= " + std::to_string(limit) + "; pass --sets for larger p");
    if (cfg.sets && p > kMaxMaskPrime)
      throw std::invalid_argument("--p: explicit sets need p <= " + std::to_string(kMaxMaskPrime));
  }
}

std::vector<const ScanRow*> ScanSummary::violations() const {
  std::vector<const ScanRow*> out;
  for (const auto& r : rows)
    if (r.report.status == BoundStatus::violated) out.push_back(&r);
  return out;
}

ScanSummary run_scan(const ScanConfig& cfg) {
  validate(cfg);
  const auto id = cfg.theorem;
  const auto problems = build_problems(cfg);

  std::map<std::uint32_t, Lists> lists;
  for (auto p : cfg.primes) {
    if (cfg.sets) continue;
    const auto hi = cfg.size_hi ? std::min(cfg.size_hi, p) : p;
    auto& L = lists[p];
    L.all = subsets_in_size_range(p, cfg.size_lo, hi);
  }

  std::vector<Context> contexts(problems.size());
  struct Item {
    std::size_t problem;
    SubsetMask first;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto& pr = problems[i];
    auto& ctx = contexts[i];
    ctx.pr = &pr;
    ctx.lo = cfg.size_lo;
    ctx.hi = cfg.size_hi ? std::min(cfg.size_hi, pr.p) : pr.p;
    ctx.f = pr.value_map();
    if (pr.fixed) {
      items.push_back({i, 0});
      continue;
    }
    auto& L = lists.at(pr.p);
    ctx.lists = &L;
    ctx.fast = fast_eligible(pr);
    if (ctx.fast) {
      ctx.h = ctx.f->coordinate_tables();
      if (pr.restriction.kind() == Restriction::Kind::pairwise) {
        ctx.allow_last.assign(pr.n, std::vector<SubsetMask>(pr.p, 0));
        for (std::size_t j = 0; j + 1 < pr.n; ++j)
          for (Residue xv = 0; xv < pr.p; ++xv)
            for (Residue v = 0; v < pr.p; ++v)
              if (pr.restriction.pair_allowed(j, pr.n - 1, xv, v))
                ctx.allow_last[j][xv] |= SubsetMask{1} << v;
      }
    }
    const auto key = std::make_pair(pr.sym, pr.conj);
    auto it = L.firsts.find(key);
    if (it == L.firsts.end()) {
      auto reps = canonical_subsets(pr.p, ctx.lo, ctx.hi, pr.sym);
      if (pr.conj != 1)
        for (auto& r : reps) r = power_image(r, pr.p, pr.conj);
      it = L.firsts.emplace(key, std::move(reps)).first;
    }
    for (auto s : it->second) items.push_back({i, s});
  }

  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    FastScratch scratch;
    while (true) {
      const auto j = next.fetch_add(1);
      if (j >= items.size()) return;
      try {
        const auto& ctx = contexts[items[j].problem];
        if (ctx.fast)
          fast_item(ctx, items[j].first, results[j], scratch);
        else
          generic_item(ctx, items[j].first, results[j]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = items.size();
        return;
      }
    }
  };
  const auto workers = std::min(cfg.jobs, std::max<std::size_t>(items.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  ScanSummary summary;
  std::size_t j = 0;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    ItemResult merged;
    for (; j < items.size() && items[j].problem == i; ++j)
      for (auto& [key, best] : results[j]) offer(merged, key, best.card, best.sets);
    for (auto& row : rows_for(problems[i], id, merged)) summary.rows.push_back(std::move(row));
  }

  auto sort_key = [](const ScanRow& r) {
    return std::tie(r.report.p, r.report.n, r.k, r.instance, r.report.sizes, r.report.coeffs,
                    r.report.restriction);
  };
  std::stable_sort(summary.rows.begin(), summary.rows.end(),
                   [&](const ScanRow& a, const ScanRow& b) { return sort_key(a) < sort_key(b); });

  for (const auto& r : summary.rows) {
    switch (r.report.status) {
      case BoundStatus::holds:
        ++summary.holds;
        break;
      case BoundStatus::violated:
        ++summary.violated;
        break;
      case BoundStatus::vacuous:
        ++summary.vacuous;
        break;
    }
    if (auto s = r.report.slack(); s && (!summary.min_slack || *s < *summary.min_slack))
      summary.min_slack = s;
  }
  return summary;
}

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "theorem,p,n,sizes,coeffs,restriction,card,bound,slack,status\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << to_string(r.theorem) << ',' << r.p << ',' << r.n << ',' << csv_field(join(r.sizes, ","), true)
        << ',' << csv_field(join(r.coeffs, ","), true) << ',' << csv_field(r.restriction, false) << ','
        << r.card << ',';
    if (r.bound) out << *r.bound;
    out << ',';
    if (auto s = r.slack()) out << *s;
    out << ',' << to_string(r.status) << '\n';
  }
}

namespace {

std::string row_json(const ScanRow& row) {
  const auto& r = row.report;
  std::string s = "{\"theorem\":" + json_escape(std::string(to_string(r.theorem)));
  s += ",\"p\":" + std::to_string(r.p);
  s += ",\"n\":" + std::to_string(r.n);
  s += ",\"k\":" + std::to_string(row.k);
  s += ",\"instance\":" + (row.instance ? std::to_string(*row.instance) : std::string("null"));
  s += ",\"sizes\":[" + join(r.sizes, ",") + "]";
  s += ",\"coeffs\":[" + join(r.coeffs, ",") + "]";
  s += ",\"restriction\":" + json_escape(r.restriction);
  s += ",\"card\":" + std::to_string(r.card);
  s += ",\"bound\":" + (r.bound ? std::to_string(*r.bound) : std::string("null"));
  const auto slack = r.slack();
  s += ",\"slack\":" + (slack ? std::to_string(*slack) : std::string("null"));
  s += ",\"status\":" + json_escape(std::string(to_string(r.status)));
  s += ",\"family\":" + json_escape(row.family);
  for (const auto& [key, value] : row.extra) s += "," + json_escape(key) + ":" + value;
  return s + "}";
}

}  // namespace

void write_jsonl(std::ostream& out, const std::vector<ScanRow>& rows) {
  for (const auto& row : rows) out << row_json(row) << '\n';
}

std::string summary_json(const ScanSummary& s) {
  std::string out = "{\"instances\":" + std::to_string(s.rows.size());
  out += ",\"holds\":" + std::to_string(s.holds);
  out += ",\"violated\":" + std::to_string(s.violated);
  out += ",\"vacuous\":" + std::to_string(s.vacuous);
  out += ",\"min_slack\":" + (s.min_slack ? std::to_string(*s.min_slack) : std::string("null"));
  out += ",\"violations\":[";
  bool first = true;
  for (const auto* r : s.violations()) {
    if (!first) out += ',';
    first = false;
    out += row_json(*r);
  }
  return out + "]}";
}

}  // namespace rsum
