#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "rsum/poly.hpp"

namespace rsum {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw std::invalid_argument("polynomial text line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

AnyPolynomial parse_polynomial(std::istream& in) {
  std::optional<std::size_t> arity;
  std::optional<std::uint64_t> modulus;
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> raw_terms;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(strip_comment(line));
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;

    if (!arity) {
      // Header: "arity n mod p", keys in either order.
      if (tokens.size() != 4) fail(line_no, "expected header 'arity <n> mod <p>'");
      for (std::size_t i = 0; i < 4; i += 2) {
        if (tokens[i] != "arity" && tokens[i] != "mod")
          fail(line_no, "unknown header key '" + tokens[i] + "'");
        unsigned long long v = 0;
        try {
          v = std::stoull(tokens[i + 1]);
        } catch (const std::logic_error&) {
          fail(line_no, "bad header value '" + tokens[i + 1] + "'");
        }
        if (tokens[i] == "arity")
          arity = v;
        else
          modulus = v;
      }
      if (!arity || !modulus) fail(line_no, "header needs both arity and mod");
      if (*arity == 0) fail(line_no, "arity must be positive");
      continue;
    }

    if (tokens.size() != *arity + 1)
      fail(line_no, "expected coefficient and " + std::to_string(*arity) + " exponents");
    std::vector<std::uint32_t> exps;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      long long v = 0;
      try {
        v = std::stoll(tokens[i]);
      } catch (const std::logic_error&) {
        fail(line_no, "bad exponent '" + tokens[i] + "'");
      }
      if (v < 0) fail(line_no, "negative exponent");
      exps.push_back(static_cast<std::uint32_t>(v));
    }
    raw_terms.emplace_back(tokens[0], std::move(exps));
  }
  if (!arity) throw std::invalid_argument("polynomial text has no header");

  auto parse_coeff = [](const std::string& s) {
    try {
      return BigInt(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient '" + s + "'");
    }
  };

  if (*modulus == 0) {
    IntPolynomial p(IntegerRing{}, *arity);
    for (const auto& [c, e] : raw_terms) p.add_term(ExponentVector(e), parse_coeff(c));
    return p;
  }
  PrimeModulus mod(*modulus);
  ModPolynomial p(ModRing(mod), *arity);
  const BigInt m = mod.value();
  for (const auto& [c, e] : raw_terms) {
    BigInt v = parse_coeff(c) % m;
    if (v < 0) v += m;
    p.add_term(ExponentVector(e), static_cast<Residue>(v));
  }
  return p;
}

AnyPolynomial parse_polynomial(const std::string& text) {
  std::istringstream in(text);
  return parse_polynomial(in);
}

ModPolynomial parse_mod_polynomial(const std::string& text) {
  auto any = parse_polynomial(text);
  if (auto* p = std::get_if<ModPolynomial>(&any)) return *p;
  throw std::invalid_argument("expected a polynomial over Z/pZ, got 'mod 0'");
}

namespace {

template <class Poly>
void write_terms(std::ostream& out, const Poly& p, std::uint32_t modulus) {
  out << "arity " << p.arity() << " mod " << modulus << '\n';
  for (const auto& [e, c] : p.terms()) {
    out << c;
    for (auto x : e.values()) out << ' ' << x;
    out << '\n';
  }
}

}  // namespace

void write_polynomial(std::ostream& out, const ModPolynomial& p) {
  write_terms(out, p, p.ring().characteristic());
}

void write_polynomial(std::ostream& out, const IntPolynomial& p) { write_terms(out, p, 0); }

}  // namespace rsum
