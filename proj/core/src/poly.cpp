#include "rsum/poly.hpp"

#include <ostream>
#include <sstream>

namespace rsum {

template class SparsePolynomial<ModRing>;
template class SparsePolynomial<IntegerRing>;

std::ostream& operator<<(std::ostream& os, const ExponentVector& e) {
  os << '(';
  for (std::size_t i = 0; i < e.arity(); ++i) os << (i ? "," : "") << e[i];
  return os << ')';
}

ModPolynomial reduce(const IntPolynomial& p, PrimeModulus mod) {
  ModRing ring(mod);
  ModPolynomial r(ring, p.arity());
  const BigInt modulus = mod.value();
  for (const auto& [e, c] : p.terms()) {
    BigInt v = c % modulus;
    if (v < 0) v += modulus;
    r.add_term(e, static_cast<Residue>(v));
  }
  return r;
}

namespace {

template <class Coeff>
std::string format_terms(const std::map<ExponentVector, Coeff>& terms, bool negative_aware) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Coeff mag = c;
    bool neg = false;
    if (negative_aware && c < 0) {
      neg = true;
      mag = -c;
    }
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << '-';
    first = false;
    bool constant = e.total_degree() == 0;
    if (constant || mag != 1) os << mag;
    bool need_star = !constant && mag != 1;
    for (std::size_t i = 0; i < e.arity(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const ModPolynomial& p) { return format_terms(p.terms(), false); }
std::string to_string(const IntPolynomial& p) { return format_terms(p.terms(), true); }

}  // namespace rsum
