#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "gen.hpp"
#include "katores/error.hpp"
#include "katores/symbols.hpp"

using namespace katores;

namespace {

LaurentUnit lu(const Ring& r, const std::map<long, long long>& m, long lo, long hi, long p_exp = 0) {
  std::map<long, GRElem> c;
  for (const auto& [e, v] : m) c.emplace(e, GRElem(r, v));
  return lau_make(r, p_exp, c, lo, hi);
}

const std::pair<u64, int> kRings[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {5, 3}};

// f is exact (finite Witt data); 1 - f loses window when its first unit
// coefficient sits high, so Steinberg pairs use a longer window.
gen::LaurentShape long_window() {
  gen::LaurentShape s;
  s.pos_hi = 60;
  return s;
}

gen::LaurentShape with_prefactor() {
  gen::LaurentShape s;
  s.max_p_exp = 2;
  return s;
}

}  // namespace

TEST_CASE("contou_carrere examples") {
  for (const auto& [p, N] : kRings) {
    const Ring r = make_ring(p, N);
    const LaurentUnit T = lau_monomial(r, 1, 30);
    const SymbolValue tt = contou_carrere(T, T);
    CHECK(tt.unit == -GRElem::one(r));
    CHECK(tt.prec == N);
  }

  const Ring r = make_ring(5, 2);
  const SymbolValue v = contou_carrere(lu(r, {{-1, -5}, {0, 1}}, -1, 30), lu(r, {{0, 1}, {1, -3}}, 0, 30));
  CHECK(v.unit == GRElem(r, 16LL));
  CHECK(v.prec == 2);
  CHECK(((16 * -14) % 25 + 25) % 25 == 1);

  const Ring f5 = make_ring(5, 1);
  CHECK(contou_carrere(lau_monomial(f5, 1, 30), lau_constant(GRElem(f5, 3LL))).unit == GRElem(f5, 2LL));

  CHECK_THROWS_WITH_AS(contou_carrere(lu(r, {{1, 1}}, 0, 30, 1), lau_monomial(r, 1, 30)),
                       doctest::Contains("NonzeroPrefactor"), Error);
  CHECK_THROWS_WITH_AS(contou_carrere(lau_monomial(r, 1), lau_monomial(make_ring(5, 3), 1)),
                       doctest::Contains("MixedRings"), Error);
}

TEST_CASE("kato_symbol examples") {
  for (int N = 1; N <= 4; ++N) {
    const Ring r = make_ring(5, N);
    // T - p = T (1 - p T^{-1})
    const SymbolValue v = kato_symbol(lu(r, {{1, 1}}, 0, 30), lu(r, {{0, -5}, {1, 1}}, 0, 30));
    CHECK(v.p_val == 0);
    CHECK(v.unit == -GRElem::one(r));
    CHECK(v.prec == N);
  }
  const Ring r = make_ring(5, 3);
  const SymbolValue a = kato_symbol(lau_monomial(r, 1, 30), lau_constant(GRElem(r, 3LL), 1));
  CHECK(a.p_val == 1);
  CHECK(a.unit == GRElem(r, 3LL));
  CHECK(kato_symbol(lau_monomial(r, 1, 30), lau_monomial(r, 1, 30)).unit == -GRElem::one(r));
}

TEST_CASE("tame_boundary and specialize examples") {
  const Ring f5 = make_ring(5, 1);
  const LaurentUnit t = lau_monomial(f5, 1, 30);
  CHECK(tame_boundary(t, t) == GRElem(f5, 4LL));
  CHECK(tame_boundary(t, lau_constant(GRElem(f5, 3LL))) == GRElem(f5, 2LL));
  CHECK(tame_boundary(lu(f5, {{0, 1}, {1, 1}}, 0, 30), lau_constant(GRElem(f5, 2LL))).is_one());

  const Ring r = make_ring(5, 2);
  const auto [a, b] = specialize(lu(r, {{2, 3}}, 0, 30), lu(r, {{1, 7}}, 0, 30));
  CHECK(a.coeff(0) == 3);
  CHECK(b.coeff(0) == 2);
  const auto [c, d] = specialize(lau_monomial(r, 1), lau_monomial(r, 1));
  CHECK(c.is_one());
  CHECK(d.is_one());
  const auto [e, unused] = specialize(lu(r, {{1, 1}, {2, 5}}, 0, 30), lau_monomial(r, 1));
  CHECK(e.is_one());
}

TEST_CASE("Steinberg relation") {
  gen::Rng rng(31);
  for (const auto& [p, N] : kRings) {
    const Ring r = make_ring(p, N);
    int tested = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const LaurentUnit f = gen::laurent(rng, r, long_window());
      const auto g = gen::one_minus(f);
      if (!g) continue;
      ++tested;
      const SymbolValue cc = contou_carrere(f, *g);
      REQUIRE(cc.prec == N);
      REQUIRE(sv_is_one(cc));
      const SymbolValue k = kato_symbol(f, *g);
      REQUIRE(k.prec == N);
      REQUIRE(sv_is_one(k));
    }
    CHECK(tested > 10);
  }
}

TEST_CASE("Steinberg relation with a p-power prefactor") {
  gen::Rng rng(32);
  for (const auto& [p, N] : kRings) {
    const Ring r = make_ring(p, N);
    for (int trial = 0; trial < 30; ++trial) {
      LaurentUnit f = gen::laurent(rng, r, long_window());
      f.p_exp = rng.range(1, 2);
      const auto g = gen::one_minus(f);
      REQUIRE(g.has_value());
      const SymbolValue k = kato_symbol(f, *g);
      REQUIRE(k.prec == N);
      REQUIRE(sv_is_one(k));
    }
  }
}

TEST_CASE("bimultiplicativity and antisymmetry") {
  gen::Rng rng(33);
  for (const auto& [p, N] : kRings) {
    const Ring r = make_ring(p, N);
    for (int trial = 0; trial < 40; ++trial) {
      const LaurentUnit f1 = gen::laurent(rng, r), f2 = gen::laurent(rng, r), g = gen::laurent(rng, r);
      const SymbolValue lhs = contou_carrere(lau_mul(f1, f2), g);
      const SymbolValue rhs = contou_carrere(f1, g) * contou_carrere(f2, g);
      REQUIRE(lhs.prec == N);
      REQUIRE(sv_equal(lhs, rhs));
      REQUIRE(sv_equal(contou_carrere(g, lau_mul(f1, f2)), contou_carrere(g, f1) * contou_carrere(g, f2)));
      REQUIRE(sv_is_one(contou_carrere(f1, g) * contou_carrere(g, f1)));

      const LaurentUnit h1 = gen::laurent(rng, r, with_prefactor()), h2 = gen::laurent(rng, r, with_prefactor());
      REQUIRE(sv_equal(kato_symbol(lau_mul(h1, h2), g), kato_symbol(h1, g) * kato_symbol(h2, g)));
      REQUIRE(sv_equal(kato_symbol(g, lau_mul(h1, h2)), kato_symbol(g, h1) * kato_symbol(g, h2)));
      REQUIRE(sv_is_one(kato_symbol(h1, h2) * kato_symbol(h2, h1)));
    }
  }
}

TEST_CASE("Kato symbol inverts the Contou-Carrere symbol") {
  gen::Rng rng(34);
  for (const auto& [p, N] : kRings) {
    const Ring r = make_ring(p, N);
    for (int trial = 0; trial < 30; ++trial) {
      const LaurentUnit f = gen::laurent(rng, r), g = gen::laurent(rng, r);
      const SymbolValue prod = kato_symbol(f, g) * contou_carrere(f, g);
      REQUIRE(prod.prec == N);
      REQUIRE(sv_is_one(prod));
    }
  }
}

TEST_CASE("rigidity under reparametrization") {
  gen::Rng rng(35);
  for (const auto& [p, N] : kRings) {
    const Ring r = make_ring(p, N);
    for (int trial = 0; trial < 15; ++trial) {
      const LaurentUnit f = gen::laurent(rng, r, with_prefactor()), g = gen::laurent(rng, r, with_prefactor());
      const LaurentUnit t = gen::parameter(rng, r);
      const SymbolValue before = kato_symbol(f, g);
      const SymbolValue after = kato_symbol(reparametrize(f, t), reparametrize(g, t));
      REQUIRE(after.prec >= 1);
      REQUIRE(sv_equal(before, after));
    }
  }
}

TEST_CASE("continuity: perturbing by U^i moves the symbol within U^i") {
  gen::Rng rng(36);
  for (const auto& [p, N] : kRings) {
    const Ring r = make_ring(p, N);
    for (int i = 1; i <= N; ++i) {
      for (int trial = 0; trial < 8; ++trial) {
        const LaurentUnit f = gen::laurent(rng, r, with_prefactor()), g = gen::laurent(rng, r, with_prefactor());
        // u = 1 + (element of p^i R((T))), built from raw coefficients.
        Series raw = gen::raw_unit_series(rng, r, 0, 2, 30);
        for (auto& c : raw.c) c = c * GRElem(r, static_cast<long long>(checked_prime_power(p, i) % r->q));
        raw = series_add(Series{r, 0, kUnbounded, {GRElem::one(r)}}, raw);
        const LaurentUnit u = lau_split(raw, 0);
        const SymbolValue ratio = kato_symbol(lau_mul(f, u), g) * sv_inverse(kato_symbol(f, g));
        REQUIRE(ratio.p_val == 0);
        REQUIRE(unit_congruent(ratio.unit, GRElem::one(r), std::min(i, ratio.prec)));
        REQUIRE(ratio.prec == N);
      }
    }
  }
}

TEST_CASE("at N = 1 the Contou-Carrere symbol is the tame symbol") {
  gen::Rng rng(37);
  for (u64 p : {2u, 3u, 5u}) {
    for (int d = 1; d <= 2; ++d) {
      const Ring r = make_ring(p, 1, d, gen::irreducible_modulus(p, d));
      for (int trial = 0; trial < 40; ++trial) {
        const LaurentUnit f = gen::laurent(rng, r), g = gen::laurent(rng, r);
        REQUIRE(contou_carrere(f, g).unit == tame_boundary(f, g));
      }
    }
  }
}

TEST_CASE("symbols over an unramified extension") {
  gen::Rng rng(38);
  const Ring r = make_ring(3, 2, 2, gen::irreducible_modulus(3, 2));
  for (int trial = 0; trial < 30; ++trial) {
    const LaurentUnit f = gen::laurent(rng, r), g = gen::laurent(rng, r);
    REQUIRE(sv_is_one(kato_symbol(f, g) * contou_carrere(f, g)));
    const auto h = gen::one_minus(f);
    if (h) REQUIRE(sv_is_one(contou_carrere(f, *h)));
  }
}
