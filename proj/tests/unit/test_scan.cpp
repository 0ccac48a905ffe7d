#include <doctest.h>

#include <sstream>

#include "rsum/scan.hpp"

using namespace rsum;

TEST_CASE("config validation") {
  ScanConfig c;
  c.primes = {9};
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.primes = {7};
  CHECK_NOTHROW(validate(c));
  c.theorem = TheoremId::cor1_3;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.theorem = TheoremId::thm1_3;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.theorem = TheoremId::dh;
  c.primes = {29};
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("coefficient modes") {
  CHECK(parse_coeff_mode("canonical") == CoeffMode::canonical);
  CHECK_THROWS(parse_coeff_mode("some"));
  CHECK(default_coeff_mode(TheoremId::dh, false) == CoeffMode::ones);
  CHECK(default_coeff_mode(TheoremId::thm1_2, false) == CoeffMode::canonical);
  CHECK(default_coeff_mode(TheoremId::thm5_2, true) == CoeffMode::random);
}

TEST_CASE("cauchy-davenport saturation") {
  ScanConfig c;
  c.theorem = TheoremId::cd;
  c.primes = {5};
  c.n = 2;
  c.coeffs = CoeffMode::ones;
  const auto s = run_scan(c);
  CHECK(s.violated == 0);
  CHECK(s.rows.size() == 25);
  for (const auto& row : s.rows) {
    const auto& z = row.report.sizes;
    if (z[0] + z[1] - 1 >= 5) CHECK(row.report.card == 5);
    CHECK(row.report.card == std::min<std::int64_t>(5, z[0] + z[1] - 1));
  }
}

TEST_CASE("csv schema") {
  ScanConfig c;
  c.theorem = TheoremId::dh;
  c.primes = {5};
  c.n = 2;
  c.coeffs = CoeffMode::ones;
  c.size_lo = 3;
  c.size_hi = 3;
  const auto s = run_scan(c);
  std::ostringstream out;
  write_csv(out, s.rows);
  CHECK(out.str() == "theorem,p,n,sizes,coeffs,restriction,card,bound,slack,status\n"
                     "dh,5,2,\"3,3\",\"1,1\",distinct,3,3,0,holds\n");
  std::ostringstream j;
  write_jsonl(j, s.rows);
  CHECK(j.str().find("\"status\":\"holds\"") != std::string::npos);
  CHECK(summary_json(s).find("\"violated\":0") != std::string::npos);
}

TEST_CASE("a false bound is caught") {
  // A constant f makes every pair collide, so the sumset is empty.
  ScanConfig c;
  c.theorem = TheoremId::cor1_2f;
  c.primes = {5};
  c.n = 2;
  c.ms = {0};
  c.random = 2;
  const auto s = run_scan(c);
  CHECK(s.violated > 0);
  for (const auto* v : s.violations()) CHECK(v->report.card == 0);
}
