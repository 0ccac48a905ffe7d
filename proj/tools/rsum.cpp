// rsum: restricted sumsets, bounds, witnesses and scans from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rsum/bounds.hpp"
#include "rsum/dyson.hpp"
#include "rsum/poly.hpp"
#include "rsum/scan.hpp"
#include "rsum/sumset.hpp"
#include "rsum/witness.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace rsum;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::int64_t parse_int(const std::string& flag, std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw UsageError(flag + ": '" + std::string(s) + "' is not an integer");
  return v;
}

std::vector<std::int64_t> parse_list(const std::string& flag, const std::string& text) {
  std::vector<std::int64_t> out;
  std::string_view rest = text;
  while (true) {
    const auto pos = rest.find(',');
    out.push_back(parse_int(flag, rest.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    rest.remove_prefix(pos + 1);
  }
}

std::uint32_t checked_prime(const std::string& flag, std::int64_t p) {
  if (p < 2 || static_cast<std::uint64_t>(p) >= PrimeModulus::kMax || !is_prime(static_cast<std::uint64_t>(p)))
    throw UsageError(flag + ": " + std::to_string(p) + " is not a prime below 2^31");
  return static_cast<std::uint32_t>(p);
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (auto v : parse_list("--p", text)) out.push_back(checked_prime("--p", v));
  return out;
}

std::string read_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(flag + ": cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModPolynomial read_poly(const std::string& flag, const std::string& path, PrimeModulus mod,
                        std::size_t n) {
  ModPolynomial P = [&] {
    try {
      return parse_mod_polynomial(read_file(flag, path));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(flag + ": " + e.what());
    }
  }();
  if (!(P.ring().modulus() == mod))
    throw UsageError(flag + ": polynomial is over Z/" + std::to_string(P.ring().modulus().value()) +
                     "Z, expected p = " + std::to_string(mod.value()));
  if (P.arity() != n)
    throw UsageError(flag + ": polynomial has arity " + std::to_string(P.arity()) + ", expected " +
                     std::to_string(n));
  return P;
}

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json opt_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

SetFamily parse_sets(const std::string& text, PrimeModulus mod, std::size_t n) {
  try {
    return SetFamily::parse(text, mod, n);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--sets: ") + e.what());
  }
}

CoefficientVector coeffs_or_ones(const std::string& text, PrimeModulus mod, std::size_t n) {
  if (text.empty()) return CoefficientVector::ones(mod, n);
  std::vector<Residue> a;
  for (auto v : parse_list("--coeffs", text)) {
    const auto r = mod.reduce(v);
    if (r == 0) throw UsageError("--coeffs: coefficients must be nonzero mod p");
    a.push_back(r);
  }
  if (a.size() != n)
    throw UsageError("--coeffs: expected " + std::to_string(n) + " coefficients, got " +
                     std::to_string(a.size()));
  return CoefficientVector(mod, a);
}

std::size_t arity_of(const std::string& sets, const std::string& coeffs, std::int64_t n_flag) {
  if (n_flag > 0) return static_cast<std::size_t>(n_flag);
  if (!coeffs.empty()) return parse_list("--coeffs", coeffs).size();
  return static_cast<std::size_t>(std::count(sets.begin(), sets.end(), ';') + 1);
}

json set_json(const ResidueSet& s) {
  return json{{"set", s.elements()}, {"card", s.size()}};
}

// --- subcommands -------------------------------------------------------------

struct SumsetArgs {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::int64_t k = 1;
  std::string coeffs, sets, poly, g;
  bool distinct = false;
};

void add_sumset_flags(CLI::App* cmd, SumsetArgs& a, bool value_set) {
  cmd->add_option("--p", a.p, "prime modulus")->required();
  cmd->add_option("--sets", a.sets, "sets, ';'-separated (\"full\", \"interval:m\" or lists)")->required();
  cmd->add_option("--coeffs", a.coeffs, "a_1,...,a_n (default all ones)");
  cmd->add_option("--n", a.n, "arity when a single set is given");
  cmd->add_flag("--distinct", a.distinct, "require x_i != x_j");
  cmd->add_option("--poly", a.poly, "restriction polynomial file: keep P(x) != 0");
  if (value_set) {
    cmd->add_option("--k", a.k, "exponent k >= 1");
    cmd->add_option("--g", a.g, "lower-order polynomial file, deg g < k");
  }
}

json input_json(const SumsetArgs& a, const SetFamily& A, const CoefficientVector& c) {
  json in{{"p", a.p}, {"sets", A.sets()}, {"coeffs", c.values()}, {"distinct", a.distinct}};
  if (!a.poly.empty()) in["poly"] = a.poly;
  return in;
}

int run_sumset(const SumsetArgs& a, bool value_set) {
  const PrimeModulus mod(checked_prime("--p", a.p));
  const auto n = arity_of(a.sets, a.coeffs, a.n);
  const auto A = parse_sets(a.sets, mod, n);
  const auto c = coeffs_or_ones(a.coeffs, mod, A.arity());
  if (a.distinct && !a.poly.empty()) throw UsageError("--distinct and --poly are exclusive");
  const auto restriction = !a.poly.empty() ? Restriction::polynomial(read_poly("--poly", a.poly, mod, A.arity()))
                           : a.distinct    ? Restriction::distinct()
                                           : Restriction::none();
  json out;
  if (value_set) {
    if (a.k < 1) throw UsageError("--k must be at least 1");
    auto f = [&] {
      try {
        if (a.g.empty()) return ValuePolynomial(static_cast<std::uint32_t>(a.k), c);
        return ValuePolynomial(static_cast<std::uint32_t>(a.k), c, read_poly("--g", a.g, mod, A.arity()));
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        throw UsageError(std::string("--g: ") + e.what());
      }
    }();
    out = set_json(restricted_value_set(f, A, restriction));
    out["input"] = input_json(a, A, c);
    out["input"]["k"] = a.k;
    if (!a.g.empty()) out["input"]["g"] = a.g;
  } else {
    out = set_json(restricted_linear_sumset(c, A, restriction));
    out["input"] = input_json(a, A, c);
  }
  std::cout << out.dump() << '\n';
  return 0;
}

struct BoundArgs {
  std::string theorem;
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::string sizes, coeffs, top, mi;
  std::int64_t k = 1;
  std::int64_t deg_p = 0;
  std::int64_t m = 0;
};

/// Greedy k_i <= |A_i| - 1 summing to deg P, or nothing if deg P is too large.
std::optional<std::vector<std::int64_t>> greedy_top(const std::vector<std::int64_t>& sizes, std::int64_t deg) {
  std::vector<std::int64_t> e(sizes.size(), 0);
  for (std::size_t i = 0; i < sizes.size() && deg > 0; ++i) {
    e[i] = std::min(deg, std::max<std::int64_t>(sizes[i] - 1, 0));
    deg -= e[i];
  }
  if (deg > 0) return std::nullopt;
  return e;
}

int run_bound(const BoundArgs& a) {
  const auto id = parse_theorem_id(a.theorem);
  const auto p = checked_prime("--p", a.p);
  const PrimeModulus mod(p);
  BoundInput in;
  in.p = p;
  in.sizes = parse_list("--sizes", a.sizes);
  in.n = a.n > 0 ? static_cast<std::size_t>(a.n) : in.sizes.size();
  if (in.sizes.size() == 1 && in.n > 1) in.sizes.assign(in.n, in.sizes[0]);
  if (in.sizes.size() != in.n)
    throw UsageError("--sizes: expected " + std::to_string(in.n) + " sizes, got " + std::to_string(in.sizes.size()));
  const auto c = coeffs_or_ones(a.coeffs, mod, in.n);
  in.coeffs.assign(c.values().begin(), c.values().end());
  in.k = a.k;
  in.deg_p = a.deg_p;
  in.m = a.m;
  if (!a.mi.empty()) in.m_i = parse_list("--mi", a.mi);
  if (!a.top.empty()) {
    in.top_exponents = parse_list("--top", a.top);
    if (in.top_exponents->size() != in.n) throw UsageError("--top: expected " + std::to_string(in.n) + " exponents");
  } else if (id == TheoremId::thm1_3 || id == TheoremId::thm5_2) {
    in.top_exponents = greedy_top(in.sizes, in.deg_p);
  }
  const auto b = evaluate_bound(id, in);
  json out{{"bound", opt_json(b)}};
  if (!b) out["status"] = "vacuous";
  json input{{"theorem", a.theorem}, {"p", p}, {"n", in.n}, {"sizes", in.sizes}, {"coeffs", in.coeffs}};
  if (in.top_exponents) input["top_exponents"] = *in.top_exponents;
  if (theorem_family(id) == Family::value_set) input["k"] = in.k;
  if (id == TheoremId::thm1_3 || id == TheoremId::thm5_2) input["degP"] = in.deg_p;
  if (id == TheoremId::cor1_2f || id == TheoremId::cor1_2d) input["m"] = in.m;
  if (id == TheoremId::cor1_3) input["m_i"] = in.m_i;
  out["input"] = input;
  std::cout << out.dump() << '\n';
  return 0;
}

struct WitnessArgs {
  std::int64_t p = 0;
  std::string k, coeffs;
  bool strict = false;
};

std::string_view case_name(WitnessCase c) {
  switch (c) {
    case WitnessCase::none:
      return "none";
    case WitnessCase::distinct_free:
      return "delta0";
    case WitnessCase::canceling_pair:
      return "canceling_pair";
    case WitnessCase::exceptional:
      return "exceptional";
  }
  return "?";
}

int run_witness(const WitnessArgs& a) {
  const PrimeModulus mod(checked_prime("--p", a.p));
  const auto k = parse_list("--k", a.k);
  const auto c = coeffs_or_ones(a.coeffs, mod, k.size());
  const WitnessOptions opts{a.strict};
  const auto m = [&] {
    try {
      return find_witness(k, c, opts);
    } catch (const PreconditionError& e) {
      throw UsageError(std::string("--k/--coeffs: ") + e.what());
    }
  }();
  const auto sigma = pairing_permutation(c);
  json out{{"witness", m},
           {"f", f_eval(k, c, m)},
           {"case", case_name(classify_witness_case(k, c, opts))},
           {"delta", delta_indicator(c).delta},
           {"pairing", sigma.images}};
  out["input"] = json{{"p", a.p}, {"k", k}, {"coeffs", c.values()}, {"strict", a.strict}};
  std::cout << out.dump() << '\n';
  return 0;
}

struct CnArgs {
  std::string poly, sets;
};

int run_cn_witness(const CnArgs& a) {
  const auto P = [&] {
    try {
      return parse_mod_polynomial(read_file("--poly", a.poly));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(std::string("--poly: ") + e.what());
    }
  }();
  const auto A = parse_sets(a.sets, P.ring().modulus(), P.arity());
  std::vector<std::size_t> sizes(A.sizes());
  const auto e = nullstellensatz_exponent(P, sizes);
  const auto x = cn_witness_search(P, A);
  json out{{"point", x ? json(*x) : json(nullptr)},
           {"exponent", e ? json(std::vector<std::uint32_t>(e->values().begin(), e->values().end()))
                          : json(nullptr)},
           {"found", x.has_value()}};
  out["input"] = json{{"poly", a.poly}, {"sets", A.sets()}};
  std::cout << out.dump() << '\n';
  return 0;
}

struct DysonArgs {
  std::string m;
  std::int64_t sy_n = 0, sy_m = 0;
  std::int64_t p = 0;
};

int run_dyson(const DysonArgs& a) {
  json out;
  if (!a.m.empty()) {
    std::vector<std::uint32_t> m;
    for (auto v : parse_list("--m", a.m)) {
      if (v < 0) throw UsageError("--m: exponents must be non-negative");
      m.push_back(static_cast<std::uint32_t>(v));
    }
    const auto coef = dyson_coefficient(m);
    const auto closed = dyson_closed_form(m);
    out = json{{"coefficient", big_json(coef)}, {"closed_form", big_json(closed)}, {"match", coef == closed}};
    if (a.p) {
      const PrimeModulus mod(checked_prime("--p", a.p));
      const auto r = dyson_coefficient_mod(m, mod);
      const auto reduced = static_cast<Residue>(((coef % mod.value()) + mod.value()) % mod.value());
      out["mod_p"] = r;
      out["mod_p_match"] = r == reduced;
    }
    out["input"] = json{{"m", m}};
  } else {
    if (a.sy_n < 1 || a.sy_m < 1) throw UsageError("--m or both --sy-n and --sy-m (>= 1) are required");
    const auto n = static_cast<std::uint32_t>(a.sy_n);
    const auto m = static_cast<std::uint32_t>(a.sy_m);
    const auto coef = sy_coefficient(n, m);
    const auto closed = sy_closed_form(n, m);
    out = json{{"coefficient", big_json(coef)}, {"closed_form", big_json(closed)}, {"match", coef == closed}};
    out["input"] = json{{"sy_n", n}, {"sy_m", m}};
  }
  std::cout << out.dump() << '\n';
  return 0;
}

struct Lemma51Args {
  std::int64_t m = 0, n = 0, k = 0;
};

int run_lemma51(const Lemma51Args& a) {
  if (a.n < 1 || a.k < 1) throw UsageError("--n and --k must be at least 1");
  const auto [lhs, rhs] = lemma_5_1_sides(a.m, a.n, a.k);
  const auto d = delta_nk(a.n, a.k);
  const auto dd = delta_nk_direct(a.n, a.k);
  json out{{"lhs", lhs}, {"rhs", rhs}, {"match", lhs == rhs}, {"delta", d}, {"delta_direct", dd},
           {"delta_match", d == dd}};
  out["input"] = json{{"m", a.m}, {"n", a.n}, {"k", a.k}};
  std::cout << out.dump() << '\n';
  return 0;
}

struct ScanArgs {
  std::string theorem, primes, sizes, sets, coeffs, ks = "1", ms = "1", poly, out, format = "csv";
  std::int64_t n = 2;
  std::int64_t jobs = 1;
  std::int64_t random = 0;
  std::int64_t max_deg = 3;
  std::uint64_t seed = 1;
  bool all_subsets = false;
  bool no_canonical = false;
  bool quiet = false;
};

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    const auto v = parse_int("--sizes", text);
    if (v < 1) throw UsageError("--sizes: sizes must be positive");
    return {static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v)};
  }
  const auto lo = parse_int("--sizes", std::string_view(text).substr(0, pos));
  const auto hi = parse_int("--sizes", std::string_view(text).substr(pos + 2));
  if (lo < 1 || hi < lo) throw UsageError("--sizes: expected lo..hi with 1 <= lo <= hi");
  return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
}

int run_scan_cmd(const ScanArgs& a) {
  ScanConfig cfg;
  try {
    cfg.theorem = parse_theorem_id(a.theorem);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--theorem: ") + e.what());
  }
  cfg.primes = parse_primes(a.primes);
  if (a.n < 1) throw UsageError("--n must be at least 1");
  cfg.n = static_cast<std::size_t>(a.n);
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  cfg.jobs = static_cast<std::size_t>(a.jobs);
  if (a.random < 0) throw UsageError("--random must be non-negative");
  cfg.random = static_cast<std::size_t>(a.random);
  if (a.max_deg < 0) throw UsageError("--max-deg must be non-negative");
  cfg.max_deg = static_cast<std::uint32_t>(a.max_deg);
  cfg.seed = a.seed;
  cfg.canonicalize = !a.no_canonical;
  if (!a.sizes.empty() && !a.all_subsets) std::tie(cfg.size_lo, cfg.size_hi) = parse_range(a.sizes);
  if (!a.sets.empty()) cfg.sets = a.sets;
  if (!a.poly.empty()) cfg.poly_text = read_file("--poly", a.poly);
  cfg.ks.clear();
  for (auto k : parse_list("--k", a.ks)) {
    if (k < 1) throw UsageError("--k values must be at least 1");
    cfg.ks.push_back(static_cast<std::uint32_t>(k));
  }
  cfg.ms = parse_list("--m", a.ms);
  if (a.coeffs.empty()) {
    cfg.coeffs = default_coeff_mode(cfg.theorem, cfg.random > 0);
  } else if (std::isdigit(static_cast<unsigned char>(a.coeffs[0])) || a.coeffs[0] == '-') {
    cfg.coeffs = CoeffMode::explicit_;
    cfg.explicit_coeffs = parse_list("--coeffs", a.coeffs);
  } else {
    try {
      cfg.coeffs = parse_coeff_mode(a.coeffs);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--coeffs: ") + e.what());
    }
  }
  if (a.format != "csv" && a.format != "jsonl") throw UsageError("--format: expected csv or jsonl");
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw UsageError("--out: cannot write '" + a.out + "'");
  }
  const auto summary = run_scan(cfg);
  std::ostream& os = a.out.empty() ? std::cout : file;
  if (a.format == "csv")
    write_csv(os, summary.rows);
  else
    write_jsonl(os, summary.rows);
  os.flush();
  if (!os) throw std::runtime_error("failed writing scan output");
  if (!a.quiet) std::cerr << summary_json(summary) << '\n';
  return summary.violated ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted sumsets over Z/pZ: cardinalities, bounds, witnesses and scans"};
  app.require_subcommand(1);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "check a bound over a box of instances");
  scan_cmd->add_option("--theorem", scan.theorem, "theorem id (cd, dh, anr, conj1.1, thm1.2, ...)")->required();
  scan_cmd->add_option("--p", scan.primes, "prime or comma-separated primes")->required();
  scan_cmd->add_option("--n", scan.n, "number of summands");
  scan_cmd->add_option("--sizes", scan.sizes, "set-size range lo..hi (default 1..p)");
  scan_cmd->add_flag("--all-subsets", scan.all_subsets, "every nonempty subset (sizes 1..p)");
  scan_cmd->add_option("--sets", scan.sets, "scan one explicit family instead");
  scan_cmd->add_option("--coeffs", scan.coeffs, "ones | all | canonical | random | a_1,...,a_n");
  scan_cmd->add_option("--k", scan.ks, "value-set exponents, comma-separated");
  scan_cmd->add_option("--m", scan.ms, "deg f (cor1.2f) or m (cor1.2d), comma-separated");
  scan_cmd->add_option("--random", scan.random, "random instances per (p, k, m)");
  scan_cmd->add_option("--seed", scan.seed, "random seed");
  scan_cmd->add_option("--max-deg", scan.max_deg, "max degree of random restriction polynomials");
  scan_cmd->add_option("--poly", scan.poly, "restriction polynomial file (thm1.3, thm5.2)");
  scan_cmd->add_flag("--no-canonical", scan.no_canonical, "enumerate every first set (audit run)");
  scan_cmd->add_option("--jobs", scan.jobs, "worker threads");
  scan_cmd->add_option("--out", scan.out, "output path (default stdout)");
  scan_cmd->add_option("--format", scan.format, "csv | jsonl");
  scan_cmd->add_flag("--quiet", scan.quiet, "no summary on stderr");

  SumsetArgs sumset;
  auto* sumset_cmd = app.add_subcommand("sumset", "restricted linear sumset of one family");
  add_sumset_flags(sumset_cmd, sumset, false);

  SumsetArgs valueset;
  auto* valueset_cmd = app.add_subcommand("valueset", "restricted value set of a_1x_1^k+...+a_nx_n^k+g");
  add_sumset_flags(valueset_cmd, valueset, true);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "evaluate one lower bound");
  bound_cmd->add_option("--theorem", bound.theorem, "theorem id")->required();
  bound_cmd->add_option("--p", bound.p, "prime")->required();
  bound_cmd->add_option("--sizes", bound.sizes, "|A_1|,...,|A_n| (one value with --n for a common set)")->required();
  bound_cmd->add_option("--n", bound.n, "number of summands (default: number of sizes)");
  bound_cmd->add_option("--coeffs", bound.coeffs, "a_1,...,a_n (default all ones)");
  bound_cmd->add_option("--k", bound.k, "value-set exponent");
  bound_cmd->add_option("--degP", bound.deg_p, "deg P");
  bound_cmd->add_option("--top", bound.top, "top exponents k_1,...,k_n of P");
  bound_cmd->add_option("--m", bound.m, "deg f (cor1.2f) or m (cor1.2d)");
  bound_cmd->add_option("--mi", bound.mi, "m_1,...,m_n (cor1.3)");

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "exponent vector with nonzero alternating sum");
  witness_cmd->add_option("--p", witness.p, "prime")->required();
  witness_cmd->add_option("--k", witness.k, "k_1,...,k_n")->required();
  witness_cmd->add_option("--coeffs", witness.coeffs, "a_1,...,a_n (default all ones)");
  witness_cmd->add_flag("--strict", witness.strict, "canceling pair must sit at positions 1, 2");

  CnArgs cn;
  auto* cn_cmd = app.add_subcommand("cn-witness", "grid point where a polynomial does not vanish");
  cn_cmd->add_option("--poly", cn.poly, "polynomial file")->required();
  cn_cmd->add_option("--sets", cn.sets, "grid sets, ';'-separated")->required();

  DysonArgs dyson;
  auto* dyson_cmd = app.add_subcommand("dyson", "constant-term identities by expansion");
  dyson_cmd->add_option("--m", dyson.m, "m_1,...,m_n");
  dyson_cmd->add_option("--p", dyson.p, "also expand over Z/pZ");
  dyson_cmd->add_option("--sy-n", dyson.sy_n, "n for the (2m-1)-power difference product");
  dyson_cmd->add_option("--sy-m", dyson.sy_m, "m for the (2m-1)-power difference product");

  Lemma51Args lemma;
  auto* lemma_cmd = app.add_subcommand("lemma51", "floor-sum identity and Delta(n,k)");
  lemma_cmd->add_option("--m", lemma.m, "m")->required();
  lemma_cmd->add_option("--n", lemma.n, "n >= 1")->required();
  lemma_cmd->add_option("--k", lemma.k, "k >= 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*scan_cmd) return run_scan_cmd(scan);
    if (*sumset_cmd) return run_sumset(sumset, false);
    if (*valueset_cmd) return run_sumset(valueset, true);
    if (*bound_cmd) return run_bound(bound);
    if (*witness_cmd) return run_witness(witness);
    if (*cn_cmd) return run_cn_witness(cn);
    if (*dyson_cmd) return run_dyson(dyson);
    if (*lemma_cmd) return run_lemma51(lemma);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
