#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen_factored.hpp"
#include "katores/error.hpp"
#include "katores/io.hpp"

using namespace katores;

namespace {

std::string show(const LaurentPoly& f) {
  std::string s;
  for (const auto& [e, c] : f) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")*T^" + (e < 0 ? "-" : "") + std::to_string(e < 0 ? -e : e);
  }
  return s;
}

}  // namespace

TEST_CASE("parse_expression examples") {
  CHECK(parse_expression("1-5*T^-1") == LaurentPoly{{-1, -5}, {0, 1}});
  CHECK(parse_expression("t") == LaurentPoly{{1, 1}});
  CHECK(parse_expression("(T-1)^2") == LaurentPoly{{0, 1}, {1, -2}, {2, 1}});
  CHECK(parse_expression("3/2*T + 1/2") == LaurentPoly{{0, mpq_class(1, 2)}, {1, mpq_class(3, 2)}});
  CHECK(parse_expression("-(T - T)") == LaurentPoly{});
  CHECK(parse_expression("(2*T)^-2") == LaurentPoly{{-2, mpq_class(1, 4)}});
  CHECK(parse_expression(" T ^ 0 ") == LaurentPoly{{0, 1}});
}

TEST_CASE("parse_expression rejects malformed input") {
  for (const char* bad : {"", "1-", "T^", "(T", "T)", "x", "T/T", "T/0", "(1+T)^-1", "T^1234567890"})
    CHECK_THROWS_WITH_AS(parse_expression(bad), doctest::Contains("Parse"), Error);
}

TEST_CASE("parse_expression reads back its own rendering") {
  gen::Rng rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly f;
    for (long i = 0, n = rng.range(1, 5); i < n; ++i) {
      const mpz_class num = gen::small(rng, 40);
      if (num == 0) continue;
      mpq_class c(num, mpz_class(static_cast<long>(rng.range(1, 9))));
      c.canonicalize();
      f[static_cast<long>(rng.range(-6, 6))] = c;
    }
    REQUIRE(parse_expression(show(f)) == f);
  }
}

TEST_CASE("to_laurent_unit extracts the p-power") {
  const Ring r = make_ring(5, 3);
  const LaurentUnit a = to_laurent_unit(parse_expression("10*T + 25"), r, std::nullopt, 30);
  CHECK(a.p_exp == 1);
  CHECK(a.w == 1);
  CHECK(a.c == GRElem(r, 2LL));
  CHECK(a.coefficients().at(0) == GRElem(r, 5LL));
  CHECK(a.coefficients().at(2).is_zero());

  const LaurentUnit b = to_laurent_unit(parse_expression("1/3 + T"), r, -2, 10);
  CHECK(b.c * GRElem(r, 3LL) == GRElem::one(r));
  CHECK(b.coefficients().at(1).is_one());

  CHECK_THROWS_WITH_AS(to_laurent_unit(LaurentPoly{}, r, std::nullopt, 30), doctest::Contains("BadParameter"), Error);
  CHECK_THROWS_WITH_AS(to_laurent_unit(parse_expression("T^-1 + 1"), r, 0, 30), doctest::Contains("BadParameter"), Error);
  CHECK_THROWS_WITH_AS(to_laurent_unit(parse_expression("T^40"), r, std::nullopt, 30), doctest::Contains("BadParameter"),
                       Error);
}

TEST_CASE("to_int_poly") {
  CHECK(to_int_poly(parse_expression("T^2 - 4*T - 5")) == IntPoly{-5, -4, 1});
  CHECK_THROWS_AS(to_int_poly(parse_expression("T^-1")), Error);
  CHECK_THROWS_AS(to_int_poly(parse_expression("T/2")), Error);
}

TEST_CASE("audit input parsing") {
  const AuditInput in = parse_audit_input(R"({
    "audit": "point", "p": 5, "N": 3,
    "f": [{"kind": "monomial", "exp": 2}, {"kind": "constant", "coeffs": ["-3/5"]}],
    "g": [{"kind": "distinguished", "coeffs": [-5, 1]}, {"kind": "unitpoly", "coeffs": ["1/2", 1], "exp": -1}]
  })");
  CHECK(in.audit == "point");
  CHECK(in.p == 5);
  CHECK(in.N == 3);
  CHECK(in.window == kDefaultWindow);
  CHECK(in.f.leading_constant() == mpq_class(-3, 5));
  // (T + 1/2)^-1 becomes (2T + 1)^-1 * 2.
  CHECK(in.g.leading_constant() == 2);

  for (const char* bad : {"", "[]", R"({"audit": "nope"})", R"({"audit": "point", "p": 5, "f": [], "g": [{"kind": "blob"}]})",
                          R"({"audit": "point", "p": 5, "f": [{"kind": "poly"}], "g": []})",
                          R"({"audit": "global", "base": "R", "f": [], "g": []})"})
    CHECK_THROWS_WITH_AS(parse_audit_input(bad), doctest::Contains("Parse"), Error);
}

TEST_CASE("omitted places are dropped before the fold") {
  AuditInput in = parse_audit_input(R"({
    "audit": "vertical", "p": 5, "N": 2,
    "f": [{"kind": "monomial"}], "g": [{"kind": "poly", "coeffs": [-1, 1]}]
  })");
  CHECK(run_audit(in).pass);
  in.omit_places = {"infinity"};
  const AuditReport r = run_audit(in);
  CHECK(r.entries.size() == 2);
  CHECK_FALSE(r.pass);
  in.omit_places = {"point T + 1"};
  CHECK_THROWS_WITH_AS(run_audit(in), doctest::Contains("BadParameter"), Error);
}

TEST_CASE("renderings are canonical") {
  const Ring r = make_ring(5, 2);
  const SymbolValue v{1, GRElem(r, 16LL), 2};
  CHECK(render(v, Format::Table) == "p^1 * 16 (mod p^2)\n");
  const std::string json = render(v, Format::Json);
  CHECK(json.find("\"coords\": [\n      \"16\"\n    ]") != std::string::npos);
  CHECK(json.find("\"H\"") != std::string::npos);

  const AuditInput in = parse_audit_input(R"({
    "audit": "global", "base": "Q",
    "f": [{"kind": "monomial"}], "g": [{"kind": "poly", "coeffs": [-1, 1]}]
  })");
  const std::string a = render(run_audit(in), Format::Json), b = render(run_audit(in), Format::Json);
  CHECK(a == b);
  CHECK(a.find("\"pass\": true") != std::string::npos);
}
