#include "rsum/sumset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace rsum {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

std::string join(std::span<const Residue> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

// --- SetFamily ---------------------------------------------------------------

SetFamily::SetFamily(PrimeModulus mod, std::vector<std::vector<Residue>> sets)
    : mod_(mod), sets_(std::move(sets)) {
  if (sets_.empty()) throw std::invalid_argument("set family must contain at least one set");
  for (const auto& s : sets_) {
    if (s.empty()) throw std::invalid_argument("sets in a family must be nonempty");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= mod.value())
        throw std::invalid_argument("set element " + std::to_string(s[i]) + " is not < p");
      if (i && s[i - 1] >= s[i])
        throw std::invalid_argument("set elements must be strictly increasing");
    }
  }
}

SetFamily SetFamily::common(PrimeModulus mod, std::vector<Residue> set, std::size_t n) {
  return SetFamily(mod, std::vector<std::vector<Residue>>(n, std::move(set)));
}

SetFamily SetFamily::parse(std::string_view text, PrimeModulus mod, std::size_t n) {
  std::vector<std::vector<Residue>> sets;
  for (auto part : split(text, ';')) {
    part = trim(part);
    std::vector<Residue> s;
    if (part == "full") {
      for (Residue r = 0; r < mod.value(); ++r) s.push_back(r);
    } else if (part.starts_with("interval:")) {
      auto m = parse_int(part.substr(9));
      if (m < 1 || m > static_cast<std::int64_t>(mod.value()))
        throw std::invalid_argument("interval length must be in [1, p]");
      for (Residue r = 0; r < m; ++r) s.push_back(r);
    } else {
      for (auto tok : split(part, ',')) s.push_back(mod.reduce(parse_int(tok)));
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    sets.push_back(std::move(s));
  }
  if (sets.size() == 1 && n > 1) sets.resize(n, sets.front());
  if (n && sets.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " sets, got " +
                                std::to_string(sets.size()));
  return SetFamily(mod, std::move(sets));
}

std::vector<std::size_t> SetFamily::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& s : sets_) out.push_back(s.size());
  return out;
}

std::uint64_t SetFamily::grid_size() const {
  std::uint64_t g = 1;
  for (const auto& s : sets_) g *= s.size();
  return g;
}

std::string SetFamily::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) out += ';';
    out += join(sets_[i]);
  }
  return out;
}

// --- CoefficientVector -------------------------------------------------------

CoefficientVector::CoefficientVector(PrimeModulus mod, std::vector<Residue> coeffs)
    : mod_(mod), a_(std::move(coeffs)) {
  if (a_.empty()) throw std::invalid_argument("coefficient vector must be nonempty");
  for (auto c : a_) {
    if (c >= mod.value()) throw std::invalid_argument("coefficient is not reduced mod p");
    if (c == 0) throw std::invalid_argument("coefficients must be nonzero");
  }
}

CoefficientVector CoefficientVector::ones(PrimeModulus mod, std::size_t n) {
  return CoefficientVector(mod, std::vector<Residue>(n, 1));
}

CoefficientVector CoefficientVector::parse(std::string_view text, PrimeModulus mod) {
  std::vector<Residue> a;
  for (auto tok : split(text, ',')) a.push_back(mod.reduce(parse_int(tok)));
  return CoefficientVector(mod, std::move(a));
}

std::string CoefficientVector::to_string() const { return join(a_); }

// --- ResidueSet ----------------------------------------------------------------

ResidueSet::ResidueSet(PrimeModulus mod) : mod_(mod), words_((mod.value() + 63) / 64, 0) {}

void ResidueSet::insert(Residue r) {
  if (r >= mod_.value()) throw std::out_of_range("residue not < p");
  auto& w = words_[r >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (r & 63);
  if (!(w & bit)) {
    w |= bit;
    ++card_;
  }
}

std::vector<Residue> ResidueSet::elements() const {
  std::vector<Residue> out;
  out.reserve(card_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(static_cast<Residue>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

// --- Restriction ---------------------------------------------------------------

std::string Restriction::default_label(Kind k) {
  switch (k) {
    case Kind::none:
      return "none";
    case Kind::distinct:
      return "distinct";
    case Kind::polynomial:
      return "poly";
    case Kind::pairwise:
      return "pairwise";
  }
  return "?";
}

Restriction Restriction::polynomial(ModPolynomial p) {
  Restriction r(Kind::polynomial);
  r.label_ = "P=" + to_string(p);
  r.poly_.push_back(std::move(p));
  return r;
}

Restriction Restriction::pairwise(std::size_t n, PrimeModulus mod, const PairPredicate& allowed,
                                  std::string label) {
  Restriction r(Kind::pairwise);
  r.label_ = std::move(label);
  r.n_ = n;
  r.p_ = mod.value();
  r.table_.assign(n * n * r.p_ * r.p_, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (Residue x = 0; x < r.p_; ++x)
        for (Residue y = 0; y < r.p_; ++y)
          r.table_[((i * n + j) * r.p_ + x) * r.p_ + y] = allowed(i, j, x, y) ? 1 : 0;
  return r;
}

const ModPolynomial& Restriction::poly() const {
  if (poly_.empty()) throw std::logic_error("restriction has no polynomial");
  return poly_.front();
}

bool Restriction::admits(std::span<const Residue> x) const {
  if (kind_ == Kind::polynomial) return poly().evaluate(x) != 0;
  for (std::size_t j = 1; j < x.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!pair_allowed(i, j, x[i], x[j])) return false;
  return true;
}

Restriction avoid_differences(PrimeModulus mod,
                              const std::vector<std::vector<std::vector<Residue>>>& avoid) {
  const std::size_t n = avoid.size();
  auto forbidden = [&](std::size_t i, std::size_t j, Residue xi, Residue xj) {
    if (i >= avoid.size() || j >= avoid[i].size()) return false;
    const auto d = mod.sub(xi, xj);
    const auto& s = avoid[i][j];
    return std::find(s.begin(), s.end(), d) != s.end();
  };
  return Restriction::pairwise(
      n, mod,
      [&](std::size_t i, std::size_t j, Residue xi, Residue xj) {
        return !forbidden(i, j, xi, xj) && !forbidden(j, i, xj, xi);
      },
      "avoid-differences");
}

Restriction distinct_images(PrimeModulus mod, std::size_t n, const std::vector<Residue>& f) {
  std::vector<Residue> image(mod.value());
  for (Residue x = 0; x < mod.value(); ++x) {
    Residue acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod.add(mod.mul(acc, x), *it % mod.value());
    image[x] = acc;
  }
  return Restriction::pairwise(
      n, mod,
      [&](std::size_t, std::size_t, Residue xi, Residue xj) { return image[xi] != image[xj]; },
      "distinct-images");
}

// --- ValuePolynomial -----------------------------------------------------------

ValuePolynomial::ValuePolynomial(std::uint32_t k, CoefficientVector a, ModPolynomial g)
    : k_(k), a_(std::move(a)), g_(std::move(g)) {
  if (k_ == 0) throw std::invalid_argument("value polynomial needs k >= 1");
  if (g_.arity() != a_.size()) throw ArityMismatch("g and coefficient vector arity differ");
  if (!(g_.ring().modulus() == a_.modulus())) throw ModulusMismatch("g is over a different field");
  if (g_.total_degree() >= static_cast<std::int64_t>(k_))
    throw std::invalid_argument("deg g must be < k");
}

ValuePolynomial::ValuePolynomial(std::uint32_t k, CoefficientVector a)
    : ValuePolynomial(k, a, ModPolynomial(ModRing(a.modulus()), a.size())) {}

bool ValuePolynomial::separable() const {
  for (const auto& [e, c] : g_.terms()) {
    int vars = 0;
    for (auto x : e.values()) vars += x > 0;
    if (vars > 1) return false;
  }
  return true;
}

Residue ValuePolynomial::evaluate(std::span<const Residue> x) const {
  const auto mod = a_.modulus();
  Residue v = g_.evaluate(x);
  for (std::size_t i = 0; i < a_.size(); ++i) v = mod.add(v, mod.mul(a_[i], mod.pow(x[i], k_)));
  return v;
}

ModPolynomial ValuePolynomial::as_polynomial() const {
  auto f = g_;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    auto e = ExponentVector::zeros(a_.size());
    e[i] = k_;
    f.add_term(e, a_[i]);
  }
  return f;
}

std::vector<std::vector<Residue>> ValuePolynomial::coordinate_tables() const {
  if (!separable()) throw std::logic_error("coordinate tables need a separable g");
  const auto mod = a_.modulus();
  const auto n = arity();
  std::vector<std::vector<Residue>> h(n, std::vector<Residue>(mod.value()));
  for (std::size_t i = 0; i < n; ++i)
    for (Residue v = 0; v < mod.value(); ++v) h[i][v] = mod.mul(a_[i], mod.pow(v, k_));
  for (const auto& [e, c] : g_.terms()) {
    std::size_t var = 0;
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) var = i, deg = e[i];
    for (Residue v = 0; v < mod.value(); ++v)
      h[var][v] = mod.add(h[var][v], mod.mul(c, mod.pow(v, deg)));
  }
  return h;
}

// --- enumeration -----------------------------------------------------------------

namespace {

/// Value of a tuple = sum_i h[i][x_i] (+ extra(x) when present). Tuples are
/// visited depth first; pairwise conditions against earlier coordinates are
/// checked as soon as the deeper coordinate is fixed.
class GridWalker {
 public:
  GridWalker(const SetFamily& A, std::vector<std::vector<Residue>> h, const Restriction& r,
             std::function<Residue(std::span<const Residue>)> extra)
      : A_(A), mod_(A.modulus()), h_(std::move(h)), r_(r), extra_(std::move(extra)),
        x_(A.arity()), partial_(A.arity() + 1, 0) {}

  ResidueSet run() {
    ResidueSet out(mod_);
    visit(0, out);
    return out;
  }

 private:
  void visit(std::size_t d, ResidueSet& out) {
    const std::size_t n = A_.arity();
    for (Residue v : A_[d]) {
      bool ok = true;
      for (std::size_t i = 0; i < d && ok; ++i) ok = r_.pair_allowed(i, d, x_[i], v);
      if (!ok) continue;
      x_[d] = v;
      partial_[d + 1] = mod_.add(partial_[d], h_[d][v]);
      if (d + 1 < n) {
        visit(d + 1, out);
        continue;
      }
      if (r_.kind() == Restriction::Kind::polynomial && r_.poly().evaluate(x_) == 0) continue;
      Residue value = partial_[n];
      if (extra_) value = mod_.add(value, extra_(x_));
      out.insert(value);
    }
  }

  const SetFamily& A_;
  PrimeModulus mod_;
  std::vector<std::vector<Residue>> h_;
  const Restriction& r_;
  std::function<Residue(std::span<const Residue>)> extra_;
  std::vector<Residue> x_;
  std::vector<Residue> partial_;
};

void check_same_field(const SetFamily& A, PrimeModulus mod, std::size_t n) {
  if (!(A.modulus() == mod)) throw ModulusMismatch("sets and coefficients over different fields");
  if (A.arity() != n) throw ArityMismatch("set family and coefficient vector arity differ");
}

void check_restriction(const Restriction& r, const SetFamily& A) {
  if (r.kind() != Restriction::Kind::polynomial) return;
  const auto& P = r.poly();
  if (P.arity() != A.arity()) throw ArityMismatch("restriction polynomial arity differs");
  if (!(P.ring().modulus() == A.modulus()))
    throw ModulusMismatch("restriction polynomial over a different field");
}

std::vector<std::vector<Residue>> linear_tables(const CoefficientVector& a) {
  const auto mod = a.modulus();
  std::vector<std::vector<Residue>> h(a.size(), std::vector<Residue>(mod.value()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (Residue v = 0; v < mod.value(); ++v) h[i][v] = mod.mul(a[i], v);
  return h;
}

}  // namespace

ResidueSet restricted_linear_sumset(const CoefficientVector& a, const SetFamily& A,
                                    const Restriction& r) {
  check_same_field(A, a.modulus(), a.size());
  check_restriction(r, A);
  return GridWalker(A, linear_tables(a), r, nullptr).run();
}

ResidueSet restricted_linear_sumset(const CoefficientVector& a, const SetFamily& A,
                                    bool distinct) {
  return restricted_linear_sumset(a, A, distinct ? Restriction::distinct() : Restriction::none());
}

ResidueSet polynomial_restricted_sumset(const SetFamily& A, const ModPolynomial& P) {
  return restricted_linear_sumset(CoefficientVector::ones(A.modulus(), A.arity()), A,
                                  Restriction::polynomial(P));
}

ResidueSet restricted_value_set(const ValuePolynomial& f, const SetFamily& A,
                                const Restriction& r) {
  check_same_field(A, f.coefficients().modulus(), f.arity());
  check_restriction(r, A);
  std::vector<std::vector<Residue>> h;
  std::function<Residue(std::span<const Residue>)> extra;
  if (f.separable()) {
    h = f.coordinate_tables();
  } else {
    h = ValuePolynomial(f.k(), f.coefficients()).coordinate_tables();
    const auto* g = &f.g();
    extra = [g](std::span<const Residue> x) { return g->evaluate(x); };
  }
  return GridWalker(A, std::move(h), r, std::move(extra)).run();
}

ResidueSet restricted_value_set(const ValuePolynomial& f, const SetFamily& A,
                                const ModPolynomial& P) {
  return restricted_value_set(f, A, Restriction::polynomial(P));
}

}  // namespace rsum
