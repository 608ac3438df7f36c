// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "../gen.hpp"
#include "../gen_factored.hpp"
#include "katores/error.hpp"
#include "katores/expand.hpp"
#include "katores/surface.hpp"
#include "katores/symbols.hpp"
#include "katores/weierstrass.hpp"

using namespace katores;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned budgets and sample sizes.
constexpr double kSteinbergBudgetSeconds = 10.0;
constexpr double kSuiteBudgetSeconds = 120.0;
constexpr int kSteinbergPairs = 300;
constexpr int kInversePairs = 200;
constexpr int kRigidityTrials = 100;
constexpr int kContinuityTrials = 100;
constexpr int kTamePairs = 200;
constexpr int kOraclePairs = 100;
constexpr int kPointAudits = 50;
constexpr int kVerticalAudits = 50;
constexpr int kOffSupportPoints = 20;
constexpr int kWeilPairs = 100;

const std::pair<u64, int> kRings[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {5, 3}};

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

IntPoly ip(std::initializer_list<long> c) {
  IntPoly f;
  for (long x : c) f.emplace_back(x);
  return f;
}

FactoredFunction T() { return FactoredFunction::monomial(1); }

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

std::string ring_name(u64 p, int N) { return "(p, N) = (" + std::to_string(p) + ", " + std::to_string(N) + ")"; }

Outcome steinberg_and_bilinearity(double& elapsed) {
  Outcome out;
  const auto t0 = Clock::now();
  gen::Rng rng(1001);
  for (const auto& [p, N] : kRings) {
    const Ring r = make_ring(p, N);
    for (int pair = 0; pair < kSteinbergPairs; ++pair) {
      LaurentUnit f = gen::laurent(rng, r, long_window());
      std::optional<LaurentUnit> one_minus_f = gen::one_minus(f);
      while (!one_minus_f) {
        f = gen::laurent(rng, r, long_window());
        one_minus_f = gen::one_minus(f);
      }
      const LaurentUnit g = gen::laurent(rng, r), f2 = gen::laurent(rng, r);
      const SymbolValue st_cc = contou_carrere(f, *one_minus_f), st_k = kato_symbol(f, *one_minus_f);
      if (st_cc.prec != N || !sv_is_one(st_cc) || st_k.prec != N || !sv_is_one(st_k))
        out.fail("Steinberg relation fails at " + ring_name(p, N));
      const LaurentUnit ff = lau_mul(f, f2);
      if (!sv_equal(contou_carrere(ff, g), contou_carrere(f, g) * contou_carrere(f2, g)) ||
          !sv_equal(contou_carrere(g, ff), contou_carrere(g, f) * contou_carrere(g, f2)) ||
          !sv_equal(kato_symbol(ff, g), kato_symbol(f, g) * kato_symbol(f2, g)) ||
          !sv_equal(kato_symbol(g, ff), kato_symbol(g, f) * kato_symbol(g, f2)))
        out.fail("bimultiplicativity fails at " + ring_name(p, N));
      if (!sv_is_one(contou_carrere(f, g) * contou_carrere(g, f)) || !sv_is_one(kato_symbol(f, g) * kato_symbol(g, f)))
        out.fail("antisymmetry fails at " + ring_name(p, N));
    }
  }
  elapsed = seconds_since(t0);
  if (elapsed >= kSteinbergBudgetSeconds) out.fail("took " + std::to_string(elapsed) + " s");
  return out;
}

Outcome inverse_relation() {
  Outcome out;
  gen::Rng rng(1002);
  for (int i = 0; i < kInversePairs; ++i) {
    const auto& [p, N] = kRings[i % 9];
    const Ring r = make_ring(p, N);
    const LaurentUnit f = gen::laurent(rng, r), g = gen::laurent(rng, r);
    const SymbolValue prod = kato_symbol(f, g) * contou_carrere(f, g);
    if (prod.prec != N || !sv_is_one(prod)) out.fail("product differs from 1 at " + ring_name(p, N));
  }
  return out;
}

Outcome rigidity() {
  Outcome out;
  gen::Rng rng(1003);
  for (int i = 0; i < kRigidityTrials; ++i) {
    const auto& [p, N] = kRings[i % 9];
    const Ring r = make_ring(p, N);
    const LaurentUnit f = gen::laurent(rng, r, with_prefactor()), g = gen::laurent(rng, r, with_prefactor());
    const LaurentUnit t = gen::parameter(rng, r);
    const SymbolValue before = kato_symbol(f, g), after = kato_symbol(reparametrize(f, t), reparametrize(g, t));
    if (after.prec < 1 || !sv_equal(before, after)) out.fail("symbol moved under reparametrization at " + ring_name(p, N));
  }
  return out;
}

Outcome continuity() {
  Outcome out;
  gen::Rng rng(1004);
  for (int trial = 0; trial < kContinuityTrials; ++trial) {
    const auto& [p, N] = kRings[trial % 9];
    const Ring r = make_ring(p, N);
    const int i = 1 + trial % N;
    const LaurentUnit f = gen::laurent(rng, r, with_prefactor()), g = gen::laurent(rng, r, with_prefactor());
    Series raw = gen::raw_unit_series(rng, r, 0, 2, 30);
    for (auto& c : raw.c) c = c * GRElem(r, static_cast<long long>(checked_prime_power(p, i) % r->q));
    const LaurentUnit u = lau_split(series_add(Series{r, 0, kUnbounded, {GRElem::one(r)}}, raw), 0);
    const SymbolValue ratio = kato_symbol(lau_mul(f, u), g) * sv_inverse(kato_symbol(f, g));
    if (ratio.p_val != 0 || ratio.prec != N || !unit_congruent(ratio.unit, GRElem::one(r), i))
      out.fail("perturbation in U^" + std::to_string(i) + " escapes U^" + std::to_string(i) + " at " + ring_name(p, N));
  }
  return out;
}

Outcome tame_reduction() {
  Outcome out;
  gen::Rng rng(1005);
  const u64 primes[] = {2, 3, 5};
  for (int i = 0; i < kTamePairs; ++i) {
    const u64 p = primes[i % 3];
    const Ring r = make_ring(p, 1);
    const LaurentUnit f = gen::laurent(rng, r), g = gen::laurent(rng, r);
    const SymbolValue cc = contou_carrere(f, g);
    if (cc.p_val != 0 || !(cc.unit == tame_boundary(f, g))) out.fail("mismatch over F_" + std::to_string(p));
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  gen::Rng rng(1006);
  for (int i = 0; i < kOraclePairs; ++i) {
    const auto& [p, N] = kRings[i % 9];
    const FactoredFunction f = gen::point_function(rng, p), g = gen::point_function(rng, p);
    const SymbolValue prod = symbol_at_p(f, g, p, N) * residue_via_primes(f, g, p, N);
    if (prod.prec < N || !sv_is_one(prod)) out.fail("Kato symbol times residue differs from 1 at " + ring_name(p, N));
  }
  // (T, T - p) at p = 5: places (p), (T), (T - p) carry -1, (-p)^-1, p.
  const AuditReport rep = verify_point_reciprocity(T(), FactoredFunction::polynomial(ip({-5, 1}), 1, AtomKind::Distinguished), 5, 3);
  const std::vector<mpq_class> expected = {mpq_class(-1), mpq_class(-1, 5), mpq_class(5)};
  if (rep.entries.size() != 3) {
    out.fail("fixture has " + std::to_string(rep.entries.size()) + " places");
  } else {
    for (std::size_t k = 0; k < 3; ++k)
      if (!rep.entries[k].value || !sv_equal(*rep.entries[k].value, rational_symbol(expected[k], 5, 3)) ||
          (rep.entries[k].exact && *rep.entries[k].exact != expected[k]))
        out.fail("fixture value at " + rep.entries[k].place);
    if (!rep.product || !sv_is_one(*rep.product) || !rep.pass) out.fail("fixture product is not 1");
  }
  return out;
}

Outcome point_reciprocity() {
  Outcome out;
  gen::Rng rng(1007);
  int controls = 0;
  for (int i = 0; i < kPointAudits; ++i) {
    const auto& [p, N] = kRings[i % 9];
    const FactoredFunction f = gen::point_function(rng, p), g = gen::point_function(rng, p);
    const AuditReport rep = verify_point_reciprocity(f, g, p, N);
    if (!rep.pass || rep.certified_prec < N - 1) out.fail("audit fails at " + ring_name(p, N));
    for (std::size_t k = 0; k < rep.entries.size(); ++k) {
      if (sv_is_one(*rep.entries[k].value)) continue;
      AuditReport bad = rep;
      bad.entries.erase(bad.entries.begin() + static_cast<long>(k));
      refold(bad);
      if (bad.pass) out.fail("dropping " + rep.entries[k].place + " went unnoticed");
      ++controls;
      break;
    }
  }
  if (controls == 0) out.fail("no negative control was exercised");
  return out;
}

Outcome vertical_reciprocity() {
  Outcome out;
  // (T, T - 1) at p = 5: symbols -1, 1, -1 at T, T + 4 and infinity.
  const AuditReport fix = verify_vertical_reciprocity(T(), FactoredFunction::polynomial(ip({-1, 1})), 5, 2);
  const Ring r52 = make_ring(5, 2);
  const std::vector<std::pair<std::string, long long>> expected = {{"point T", -1}, {"point T + 4", 1}, {"infinity", -1}};
  if (fix.entries.size() != expected.size()) {
    out.fail("fixture has " + std::to_string(fix.entries.size()) + " places");
  } else {
    for (std::size_t k = 0; k < expected.size(); ++k) {
      const auto& e = fix.entries[k];
      if (e.place != expected[k].first || e.value->p_val != 0 || !(e.value->unit == GRElem(r52, expected[k].second)))
        out.fail("fixture value at " + e.place);
    }
    if (!fix.pass) out.fail("fixture product is not 1");
  }

  gen::Rng rng(1008);
  for (int i = 0; i < kVerticalAudits; ++i) {
    const auto& [p, N] = kRings[i % 9];
    const FactoredFunction f = gen::vertical_function(rng, p), g = gen::vertical_function(rng, p);
    const AuditReport rep = verify_vertical_reciprocity(f, g, p, N);
    if (!rep.pass || rep.certified_prec < N) out.fail("audit fails at " + ring_name(p, N));
  }

  const u64 p = 5;
  const int N = 3;
  const FactoredFunction f = gen::vertical_function(rng, p), g = gen::vertical_function(rng, p);
  const std::vector<ClosedPoint> support = vertical_support(f, g, p);
  int checked = 0;
  for (int d = 1; d <= 3 && checked < kOffSupportPoints; ++d) {
    for (const fp::Poly& h : fp::monic_irreducibles(p, d)) {
      const ClosedPoint x = ClosedPoint::fiber(h);
      bool in_support = false;
      for (const auto& s : support) in_support |= (s.kind == x.kind && s.h == x.h);
      if (in_support) continue;
      const SymbolValue v = local_symbol(f, g, x, Curve::vertical(), p, N);
      if (v.p_val != 0 || !v.unit.is_one()) out.fail("off-support point " + x.descriptor() + " gives a nontrivial symbol");
      if (++checked == kOffSupportPoints) break;
    }
  }
  if (checked != kOffSupportPoints) out.fail("only " + std::to_string(checked) + " off-support points");
  return out;
}

Outcome global_reciprocity() {
  Outcome out;
  gen::Rng rng(1009);
  const u64 qs[] = {2, 3, 5, 7};
  for (int i = 0; i < kWeilPairs; ++i) {
    const u64 q = qs[i % 4];
    const FactoredFunction f = gen::fq_function(rng, q), g = gen::fq_function(rng, q);
    const AuditReport rep = verify_global_weil_fq(f, g, q);
    if (!rep.pass || !rep.product || !sv_is_one(*rep.product)) out.fail("Weil reciprocity fails over F_" + std::to_string(q));
  }

  // (t, t - 1) over Q: -1 at t, 1 at t - 1, -1 at infinity.
  const AuditReport fix = verify_global_weil_q(T(), FactoredFunction::polynomial(ip({-1, 1})));
  const std::vector<mpq_class> expected = {mpq_class(-1), mpq_class(1), mpq_class(-1)};
  if (fix.entries.size() != 3) {
    out.fail("fixture has " + std::to_string(fix.entries.size()) + " places");
  } else {
    for (std::size_t k = 0; k < 3; ++k)
      if (*fix.entries[k].exact != expected[k]) out.fail("fixture value at " + fix.entries[k].place);
    if (!fix.exact_product || *fix.exact_product != 1 || !fix.pass) out.fail("fixture product is not 1");
  }

  // Random pairs over Q: exact product 1 and every absolute value of it 1.
  for (int i = 0; i < 20; ++i) {
    const FactoredFunction f = gen::rational_function(rng), g = gen::rational_function(rng);
    const AuditReport rep = verify_global_weil_q(f, g);
    if (!rep.pass || !rep.exact_product || *rep.exact_product != 1) out.fail("rational product differs from 1");
    for (const auto& row : rep.abs_table) {
      mpq_class prod = 1;
      for (const auto& v : row.values) prod *= v;
      if (prod != 1 || row.product != 1) out.fail("absolute values at " + row.place + " multiply to " + to_string(prod));
    }
  }
  return out;
}

// No floating point anywhere in the library sources.
Outcome exact_arithmetic_only() {
  Outcome out;
  const std::regex fp_token(R"(\b(float|double)\b)");
  for (const char* dir : {"src", "include"}) {
    for (const auto& entry : std::filesystem::recursive_directory_iterator(std::filesystem::path(KATORES_SOURCE_DIR) / dir)) {
      if (!entry.is_regular_file()) continue;
      std::ifstream in(entry.path());
      std::string line;
      for (int n = 1; std::getline(in, line); ++n)
        if (std::regex_search(line, fp_token))
          out.fail(entry.path().filename().string() + ":" + std::to_string(n) + " uses floating point");
    }
  }
  return out;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  bool all = true;
  auto report = [&](int n, const std::string& name, const std::function<Outcome()>& run) {
    const auto t = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all &= o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << n << " " << name << " (" << seconds_since(t) << " s)";
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << std::endl;
  };

  double steinberg_seconds = 0;
  report(1, "Steinberg relation, bimultiplicativity, antisymmetry", [&] { return steinberg_and_bilinearity(steinberg_seconds); });
  report(2, "Kato symbol inverts the Contou-Carrere symbol", inverse_relation);
  report(3, "rigidity under reparametrization", rigidity);
  report(4, "continuity in the unit filtration", continuity);
  report(5, "Contou-Carrere symbol reduces to the tame symbol at N = 1", tame_reduction);
  report(6, "Kato symbol at (p) agrees with the residue over distinguished primes", oracle_equivalence);
  report(7, "reciprocity around a point", point_reciprocity);
  report(8, "reciprocity along the special fiber", vertical_reciprocity);
  report(9, "global reciprocity over F_q and Q", global_reciprocity);
  report(10, "runtime budget and exact arithmetic", [&] {
    Outcome o = exact_arithmetic_only();
    const double total = seconds_since(t0);
    if (total >= kSuiteBudgetSeconds) o.fail("suite took " + std::to_string(total) + " s");
    if (steinberg_seconds >= kSteinbergBudgetSeconds) o.fail("criterion 1 took " + std::to_string(steinberg_seconds) + " s");
    return o;
  });
  return all ? 0 : 1;
}
