#include "katores/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "katores/error.hpp"
#include "katores/expand.hpp"
#include "katores/gr_poly.hpp"
#include "katores/parallel.hpp"
#include "katores/weierstrass.hpp"

namespace katores {

namespace {

const fp::Poly kT{0, 1};

Ring point_ring(const ClosedPoint& x, u64 p, int N) {
  if (x.kind == ClosedPoint::Kind::Infinity || x.degree() == 1) return make_ring(p, N);
  return make_ring(p, N, x.degree(), std::vector<u64>(x.h.begin(), x.h.end()));
}

SymbolValue vertical_symbol(const FactoredFunction& f, const FactoredFunction& g, const ClosedPoint& x, u64 p, int N,
                            long window) {
  const Ring ring = point_ring(x, p, N);
  for (long W = std::max(window, 1L);; W *= 2) {
    try {
      const SymbolValue s = kato_symbol(expand_at_point(f, x, ring, W), expand_at_point(g, x, ring, W));
      if (s.prec >= N) {
        if (ring->d == 1) return s;
        return {s.p_val * ring->d, norm(s.unit), s.prec};
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::WindowUnderflow) throw;
    }
    if (W >= kMaxWindow)
      throw Error(ErrorCode::PrecisionExhausted, "window " + std::to_string(W) + " does not certify p^" + std::to_string(N) +
                                                     " at " + x.descriptor());
  }
}

void check_incident_horizontal(const ClosedPoint& x, const IntPoly& pi, u64 p) {
  if (x.kind != ClosedPoint::Kind::Fiber) throw Error(ErrorCode::NotIncident, "horizontal curves meet only finite fiber points");
  if (pi.size() < 2 || pi.back() != 1) throw Error(ErrorCode::BadParameter, "horizontal curve needs a monic equation");
  const fp::Factorization fac = fp::factor(fp::reduce(pi, p), p);
  if (fac.factors.size() != 1 || fac.factors[0].first != x.h)
    throw Error(ErrorCode::NotIncident, "(" + poly_to_string(pi) + ") does not pass through " + x.descriptor());
  if (irreducible_over_Qp(pi, p) == std::optional<bool>(false))
    throw Error(ErrorCode::BadParameter, "curve equation is reducible over Q_p: " + poly_to_string(pi));
}

}  // namespace

SymbolValue local_symbol(const FactoredFunction& f, const FactoredFunction& g, const ClosedPoint& x, const Curve& y,
                         u64 p, int N, long window) {
  if (y.kind == Curve::Kind::Horizontal) {
    check_incident_horizontal(x, y.pi, p);
    return rational_symbol(tame_norm(f, g, y.pi), p, N);
  }
  if (x.kind != ClosedPoint::Kind::Fiber && x.kind != ClosedPoint::Kind::Infinity)
    throw Error(ErrorCode::NotIncident, x.descriptor() + " is not on the special fiber");
  return vertical_symbol(f, g, x, p, N, window);
}

SymbolValue symbol_at_p(const FactoredFunction& f, const FactoredFunction& g, u64 p, int N, long window) {
  return vertical_symbol(f, g, ClosedPoint::fiber(kT), p, N, window);
}

namespace {

mpq_class abs_value(const mpq_class& x, const std::string& place) {
  if (place == "inf") return abs(x);
  const mpz_class ell(place);
  return rational_pow(mpq_class(ell), -valuation(x, ell.get_ui()));
}

void fill_abs_table(AuditReport& report) {
  std::set<mpz_class> primes;
  for (const auto& e : report.entries) {
    if (!e.exact) continue;
    for (const mpz_class& z : {e.exact->get_num(), e.exact->get_den()})
      for (const auto& [ell, m] : factor_integer(abs(z))) primes.insert(ell);
  }
  std::vector<std::string> places{"inf"};
  for (const auto& ell : primes) places.push_back(ell.get_str());
  report.abs_table.clear();
  for (const auto& v : places) {
    AbsValueRow row;
    row.place = v;
    row.product = 1;
    for (const auto& e : report.entries) {
      const mpq_class a = e.exact ? abs_value(*e.exact, v) : mpq_class(1);
      row.values.push_back(a);
      row.product *= a;
    }
    report.abs_table.push_back(std::move(row));
  }
}

}  // namespace

void refold(AuditReport& report) {
  if (report.base == "Q") {
    mpq_class prod = 1;
    for (const auto& e : report.entries)
      if (e.exact) prod *= *e.exact;
    report.exact_product = prod;
    fill_abs_table(report);
    mpq_class idele = 1;
    for (const auto& row : report.abs_table) idele *= row.product;
    report.certified_prec = 0;
    report.pass = (prod == 1) && (idele == 1);
    return;
  }
  SymbolValue prod = SymbolValue::one(make_ring(report.p, report.N));
  for (const auto& e : report.entries)
    if (e.value) prod = prod * *e.value;
  report.product = prod;
  report.certified_prec = prod.prec;
  report.pass = prod.prec >= report.target && sv_is_one(prod);
  if (report.audit == "point") {
    mpq_class exact = 1;
    bool all_exact = true;
    for (const auto& e : report.entries) {
      if (e.exact)
        exact *= *e.exact;
      else
        all_exact = false;
    }
    if (all_exact) report.exact_product = exact;
  }
}

AuditReport verify_point_reciprocity(const FactoredFunction& f_in, const FactoredFunction& g_in, u64 p, int N,
                                     long window) {
  const FactoredFunction f = classify_atoms(f_in, p), g = classify_atoms(g_in, p);
  const std::vector<DistinguishedPrime> primes = distinguished_support(f, g, p);
  AuditReport report;
  report.audit = "point";
  report.base = "Z_p";
  report.p = p;
  report.N = N;
  report.target = 1;
  report.entries = parallel_map<AuditEntry>(primes.size() + 1, [&](std::size_t i) {
    AuditEntry e;
    if (i == 0) {
      e.place = "(p)";
      e.value = symbol_at_p(f, g, p, N, window);
      return e;
    }
    const DistinguishedPrime& pi = primes[i - 1];
    e.place = ClosedPoint::distinguished(pi.pi).descriptor() + (pi.asserted ? " [asserted]" : "");
    e.exact = tame_norm(f, g, pi.pi);
    e.value = rational_symbol(*e.exact, p, N);
    return e;
  });
  refold(report);
  return report;
}

namespace {

void require_unit_content(const FactoredFunction& f, u64 p) {
  for (const auto& a : f.atoms) {
    if (a.kind == AtomKind::Constant) {
      if (valuation(a.constant, p) != 0)
        throw Error(ErrorCode::BadReduction, "constant " + to_string(a.constant) + " is not a unit at p");
    } else if (fp::reduce(a.poly, p).empty()) {
      throw Error(ErrorCode::BadReduction, "atom " + poly_to_string(a.poly) + " vanishes mod p");
    }
  }
}

}  // namespace

std::vector<ClosedPoint> vertical_support(const FactoredFunction& f_in, const FactoredFunction& g_in, u64 p) {
  std::vector<ClosedPoint> points;
  bool any_poly = false;
  for (const FactoredFunction& h : {normalize(f_in), normalize(g_in)}) {
    for (const auto& a : h.atoms) {
      if (a.kind == AtomKind::Constant) continue;
      any_poly = true;
      for (const auto& [factor, m] : fp::factor(fp::reduce(a.poly, p), p).factors) points.push_back(ClosedPoint::fiber(factor));
    }
  }
  if (any_poly) points.push_back(ClosedPoint::infinity());
  std::sort(points.begin(), points.end(), canonical_less);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const ClosedPoint& a, const ClosedPoint& b) {
                             return !canonical_less(a, b) && !canonical_less(b, a);
                           }),
               points.end());
  return points;
}

AuditReport verify_vertical_reciprocity(const FactoredFunction& f, const FactoredFunction& g, u64 p, int N, int n,
                                        long window) {
  require_unit_content(f, p);
  require_unit_content(g, p);
  if (n == 0) n = N;
  if (n < 1 || n > N) throw Error(ErrorCode::BadParameter, "target precision must lie in [1, N]");
  const std::vector<ClosedPoint> points = vertical_support(f, g, p);
  AuditReport report;
  report.audit = "vertical";
  report.base = "Z_p";
  report.p = p;
  report.N = N;
  report.target = n;
  report.entries = parallel_map<AuditEntry>(points.size(), [&](std::size_t i) {
    AuditEntry e;
    e.place = points[i].descriptor();
    e.value = local_symbol(f, g, points[i], Curve::vertical(), p, N, window);
    return e;
  });
  refold(report);
  return report;
}

namespace {

// A function on P^1 over F_q: lead * prod factor^exp with monic irreducible factors.
struct FqFunction {
  u64 lead = 1;
  std::map<fp::Poly, long> exps;
};

FqFunction reduce_fq(const FactoredFunction& f, u64 q) {
  FqFunction out;
  for (const auto& a : f.atoms) {
    if (a.kind == AtomKind::Constant) {
      if (valuation(a.constant, q) != 0)
        throw Error(ErrorCode::BadReduction, "constant " + to_string(a.constant) + " vanishes or has a pole mod q");
      const u64 c = unit_residue(a.constant, q);
      const u64 ce = a.exp >= 0 ? fp::powmod(c, static_cast<u64>(a.exp), q) : fp::powmod(fp::invmod(c, q), static_cast<u64>(-a.exp), q);
      out.lead = fp::mulmod(out.lead, ce, q);
      continue;
    }
    const fp::Poly r = fp::reduce(a.poly, q);
    if (r.empty()) throw Error(ErrorCode::BadReduction, "atom " + poly_to_string(a.poly) + " vanishes mod q");
    const fp::Factorization fac = fp::factor(r, q);
    const u64 le = a.exp >= 0 ? fp::powmod(fac.lead, static_cast<u64>(a.exp), q)
                              : fp::powmod(fp::invmod(fac.lead, q), static_cast<u64>(-a.exp), q);
    out.lead = fp::mulmod(out.lead, le, q);
    for (const auto& [factor, m] : fac.factors) out.exps[factor] += m * a.exp;
  }
  for (auto it = out.exps.begin(); it != out.exps.end();) it = (it->second == 0) ? out.exps.erase(it) : std::next(it);
  return out;
}

GRElem fq_pow(const GRElem& x, long e) { return e >= 0 ? x.pow(static_cast<long long>(e)) : x.inverse().pow(static_cast<long long>(-e)); }

long exp_of(const FqFunction& f, const fp::Poly& m) {
  const auto it = f.exps.find(m);
  return it == f.exps.end() ? 0 : it->second;
}

// N_{k(m)/F_q} of (f / m^{v_m(f)})^mult.
GRElem fq_norm(const FqFunction& f, const fp::Poly& m, long mult, const Ring& ring) {
  const GRPoly M = grp::from_u64(ring, m);
  const long deg = fp::degree(m);
  GRElem r = fq_pow(GRElem(ring, static_cast<long long>(f.lead)), deg * mult);
  for (const auto& [factor, e] : f.exps) {
    if (factor == m) continue;
    r *= fq_pow(resultant(M, grp::from_u64(ring, factor)), e * mult);
  }
  return r;
}

long degree_fq(const FqFunction& f) {
  long d = 0;
  for (const auto& [factor, e] : f.exps) d += fp::degree(factor) * e;
  return d;
}

}  // namespace

AuditReport verify_global_weil_fq(const FactoredFunction& f_in, const FactoredFunction& g_in, u64 q) {
  if (!is_prime(q)) throw Error(ErrorCode::BadParameter, "q must be prime");
  const Ring ring = make_ring(q, 1);
  const FqFunction f = reduce_fq(f_in, q), g = reduce_fq(g_in, q);
  std::vector<ClosedPoint> places;
  std::set<fp::Poly> seen;
  for (const FqFunction* h : {&f, &g})
    for (const auto& [factor, e] : h->exps)
      if (seen.insert(factor).second) places.push_back(ClosedPoint::fiber(factor));
  std::sort(places.begin(), places.end(), canonical_less);
  places.push_back(ClosedPoint::infinity());

  AuditReport report;
  report.audit = "global";
  report.base = "F_" + std::to_string(q);
  report.p = q;
  report.N = 1;
  report.target = 1;
  const GRElem minus_one = -GRElem::one(ring);
  report.entries = parallel_map<AuditEntry>(places.size(), [&](std::size_t i) {
    const ClosedPoint& z = places[i];
    long a, b;
    GRElem value = GRElem::one(ring);
    if (z.kind == ClosedPoint::Kind::Infinity) {
      a = -degree_fq(f);
      b = -degree_fq(g);
      value = fq_pow(GRElem(ring, static_cast<long long>(f.lead)), b) * fq_pow(GRElem(ring, static_cast<long long>(g.lead)), -a);
      if ((a * b) % 2 != 0) value = -value;
    } else {
      a = exp_of(f, z.h);
      b = exp_of(g, z.h);
      value = fq_norm(f, z.h, b, ring) * fq_norm(g, z.h, -a, ring);
      if ((a * b * fp::degree(z.h)) % 2 != 0) value *= minus_one;
    }
    AuditEntry e;
    e.place = (z.kind == ClosedPoint::Kind::Infinity) ? "infinity" : "place (" + poly_to_string(z.h) + ")";
    e.value = SymbolValue{0, value, 1};
    return e;
  });
  refold(report);
  return report;
}

namespace {

RatPoly to_rat(const IntPoly& f) { return RatPoly(f.begin(), f.end()); }

RatPoly monic_rat(const IntPoly& m) {
  RatPoly r = to_rat(m);
  const mpq_class lc = r.back();
  for (auto& c : r) c /= lc;
  return r;
}

}  // namespace

AuditReport verify_global_weil_q(const FactoredFunction& f_in, const FactoredFunction& g_in) {
  const FactoredFunction f = normalize(f_in), g = normalize(g_in);
  std::vector<ClosedPoint> places;
  for (const FactoredFunction* h : {&f, &g}) {
    for (const auto& a : h->atoms) {
      if (a.kind == AtomKind::Constant) continue;
      if (irreducible_over_Q(a.poly) == std::optional<bool>(false))
        throw Error(ErrorCode::BadParameter, "atom " + poly_to_string(a.poly) + " is reducible over Q; supply its factors");
      places.push_back(ClosedPoint::generic(a.poly));
    }
  }
  std::sort(places.begin(), places.end(), canonical_less);
  places.erase(std::unique(places.begin(), places.end(), [](const ClosedPoint& x, const ClosedPoint& y) { return x.poly == y.poly; }),
               places.end());
  places.push_back(ClosedPoint::infinity());

  auto exp_of_q = [](const FactoredFunction& h, const IntPoly& m) {
    long e = 0;
    for (const auto& a : h.atoms)
      if (a.kind != AtomKind::Constant && a.poly == m) e += a.exp;
    return e;
  };
  // N(h / m^{v_m(h)})^mult, or the leading coefficient of h^mult at infinity.
  auto norm_q = [](const FactoredFunction& h, const IntPoly* m, long mult) {
    mpq_class r = 1;
    const long deg = m ? poly::degree(*m) : 1;
    const RatPoly mm = m ? monic_rat(*m) : RatPoly{};
    for (const auto& a : h.atoms) {
      if (a.kind == AtomKind::Constant) {
        r *= rational_pow(a.constant, a.exp * deg * mult);
      } else if (!m) {
        r *= rational_pow(mpq_class(a.poly.back()), a.exp * mult);
      } else if (a.poly != *m) {
        r *= rational_pow(resultant(mm, to_rat(a.poly)), a.exp * mult);
      }
    }
    return r;
  };
  auto degree_q = [](const FactoredFunction& h) {
    long d = 0;
    for (const auto& a : h.atoms)
      if (a.kind != AtomKind::Constant) d += poly::degree(a.poly) * a.exp;
    return d;
  };

  AuditReport report;
  report.audit = "global";
  report.base = "Q";
  report.entries = parallel_map<AuditEntry>(places.size(), [&](std::size_t i) {
    const ClosedPoint& z = places[i];
    const bool inf = z.kind == ClosedPoint::Kind::Infinity;
    const long a = inf ? -degree_q(f) : exp_of_q(f, z.poly);
    const long b = inf ? -degree_q(g) : exp_of_q(g, z.poly);
    const IntPoly* m = inf ? nullptr : &z.poly;
    mpq_class value = norm_q(f, m, b) * norm_q(g, m, -a);
    if ((a * b * (inf ? 1 : poly::degree(z.poly))) % 2 != 0) value = -value;
    AuditEntry e;
    e.place = z.descriptor();
    e.exact = value;
    return e;
  });
  refold(report);
  return report;
}

}  // namespace katores
