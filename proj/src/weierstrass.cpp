#include "katores/weierstrass.hpp"

#include <algorithm>

#include "katores/error.hpp"
#include "katores/parallel.hpp"

namespace katores {

PreparedForm prepare(const GRPoly& f_in, long p_val) {
  GRPoly f = f_in;
  grp::trim(f);
  std::size_t l = 0;
  while (l < f.size() && !f[l].is_unit()) ++l;
  if (l == f.size()) throw Error(ErrorCode::AllCoeffsNonUnit, "polynomial vanishes mod p");
  const Ring ring = f.front().ring();
  GRPoly a{GRElem::one(ring)}, h = f;
  if (l > 0) {
    const Ring field = residue_ring(ring);
    GRPoly g0(l + 1, GRElem::zero(field));
    g0[l] = GRElem::one(field);
    const GRPoly fbar = grp::cast(f, field);
    const GRPoly h0(fbar.begin() + static_cast<long>(l), fbar.end());
    HenselFactors split = hensel_lift(f, g0, h0);
    a = std::move(split.g);
    h = std::move(split.h);
  }
  PreparedForm out;
  out.p_val = p_val;
  out.f0 = h.front();
  out.a = std::move(a);
  out.b = {GRElem::one(ring)};
  out.u = grp::scale(h, out.f0.inverse());
  return out;
}

PreparedForm prepare(const IntPoly& f_in, u64 p, int N) {
  IntPoly f = f_in;
  poly::trim(f);
  if (f.empty()) throw Error(ErrorCode::AllCoeffsNonUnit, "zero polynomial");
  int v = -1;
  for (const auto& c : f)
    if (c != 0) v = (v < 0) ? valuation(c, p) : std::min(v, valuation(c, p));
  mpz_class pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), p, static_cast<unsigned long>(v));
  for (auto& c : f) c /= pv;
  return prepare(grp::from_int(make_ring(p, N), f), v);
}

GRElem resultant(const GRPoly& a_in, const GRPoly& b_in) {
  GRPoly a = a_in, b = b_in;
  grp::trim(a);
  grp::trim(b);
  if (a.empty() || !grp::is_monic(a)) throw Error(ErrorCode::BadParameter, "resultant expects a monic first argument");
  const Ring ring = a.front().ring();
  const GRElem zero = GRElem::zero(ring), one = GRElem::one(ring);
  const std::size_t n = static_cast<std::size_t>(grp::degree(a));
  if (n == 0) return one;
  std::vector<std::vector<GRElem>> m(n, std::vector<GRElem>(n, zero));
  GRPoly row = b.empty() ? GRPoly{} : grp::divmod(b, a).second;
  const GRPoly x{zero, one};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) m[i][j] = row[j];
    row = grp::divmod(grp::mul(row, x), a).second;
  }
  return determinant(m, zero, one);
}

namespace {

bool is_distinguished(const IntPoly& f, u64 p) {
  if (f.size() < 2 || f.back() != 1) return false;
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (mpz_divisible_ui_p(f[i].get_mpz_t(), p) == 0) return false;
  return true;
}

// Largest M with p^M < 2^62.
int max_precision(u64 p) {
  int M = 0;
  for (unsigned __int128 q = p; q < (static_cast<unsigned __int128>(1) << 62); q *= p) ++M;
  return M;
}

mpz_class symmetric_lift(const GRElem& c) {
  const u64 q = c.ring()->q, v = c.coeff(0);
  mpz_class z, qz;
  mpz_set_ui(z.get_mpz_t(), v);
  mpz_set_ui(qz.get_mpz_t(), q);
  if (v > q / 2) z -= qz;
  return z;
}

std::vector<std::pair<IntPoly, AtomKind>> classify_poly(const IntPoly& A, AtomKind declared, u64 p) {
  if (mpz_divisible_ui_p(A[0].get_mpz_t(), p) == 0) {
    if (declared == AtomKind::Distinguished)
      throw Error(ErrorCode::BadParameter, "atom declared distinguished has a unit constant term: " + poly_to_string(A));
    return {{A, AtomKind::UnitPoly}};
  }
  if (declared == AtomKind::UnitPoly)
    throw Error(ErrorCode::BadParameter, "atom declared unitpoly has constant term divisible by p: " + poly_to_string(A));
  if (is_distinguished(A, p)) {
    if (irreducible_over_Qp(A, p) == std::optional<bool>(false))
      throw Error(ErrorCode::BadParameter, "distinguished atom is reducible over Q_p; supply its factors: " + poly_to_string(A));
    return {{A, AtomKind::Distinguished}};
  }
  if (declared == AtomKind::Distinguished)
    throw Error(ErrorCode::BadParameter, "atom declared distinguished is not: " + poly_to_string(A));
  // Weierstrass split, accepted only when the distinguished factor is integral.
  const PreparedForm prep = prepare(A, p, max_precision(p));
  IntPoly a;
  for (const auto& c : prep.a) a.push_back(symmetric_lift(c));
  auto [quot, rem] = divmod_monic(A, a);
  if (!rem.empty())
    throw Error(ErrorCode::BadParameter,
                "atom has no integral Weierstrass factorization; supply distinguished and unit factors: " + poly_to_string(A));
  auto out = classify_poly(a, AtomKind::Poly, p);
  out.emplace_back(quot, AtomKind::UnitPoly);
  return out;
}

}  // namespace

DistinguishedPrime make_distinguished_prime(const IntPoly& pi_in, u64 p) {
  IntPoly pi = pi_in;
  poly::trim(pi);
  if (!is_distinguished(pi, p))
    throw Error(ErrorCode::BadParameter, "not a distinguished polynomial at p = " + std::to_string(p) + ": " + poly_to_string(pi));
  const std::optional<bool> irr = irreducible_over_Qp(pi, p);
  if (irr == std::optional<bool>(false))
    throw Error(ErrorCode::BadParameter, "distinguished polynomial is reducible over Q_p: " + poly_to_string(pi));
  DistinguishedPrime out;
  out.pi = pi;
  out.degree = poly::degree(pi);
  out.p = p;
  out.asserted = !irr.has_value();
  return out;
}

FactoredFunction classify_atoms(const FactoredFunction& f_in, u64 p) {
  const FactoredFunction f = normalize(f_in);
  FactoredFunction out;
  for (const auto& atom : f.atoms) {
    if (atom.kind == AtomKind::Constant || atom.kind == AtomKind::Monomial) {
      out.atoms.push_back(atom);
      continue;
    }
    for (const auto& [g, kind] : classify_poly(atom.poly, atom.kind, p))
      out = out * FactoredFunction::polynomial(g, atom.exp, kind);
  }
  return normalize(out);
}

mpq_class tame_norm(const FactoredFunction& f, const FactoredFunction& g, const IntPoly& pi) {
  const long a = valuation_at(f, pi), b = valuation_at(g, pi);
  const long n = poly::degree(pi);
  mpq_class r = ((a * b * n) % 2 == 0) ? 1 : -1;
  // r *= N(h / pi^{v(h)})^mult, atom by atom.
  auto accumulate = [&](const FactoredFunction& h, long mult) {
    if (mult == 0) return;
    for (const auto& atom : h.atoms) {
      if (atom.kind == AtomKind::Constant) {
        r *= rational_pow(atom.constant, atom.exp * n * mult);
        continue;
      }
      IntPoly A = atom.poly;
      while (true) {
        auto [q, rem] = divmod_monic(A, pi);
        if (!rem.empty() || q.empty()) break;
        A = std::move(q);
      }
      const mpz_class res = resultant(pi, A);
      if (res == 0) throw Error(ErrorCode::BadParameter, "prime is not irreducible: " + poly_to_string(pi));
      r *= rational_pow(mpq_class(res), atom.exp * mult);
    }
  };
  accumulate(f, b);
  accumulate(g, -a);
  return r;
}

SymbolValue rational_symbol(const mpq_class& x, u64 p, int N) {
  if (x == 0) throw Error(ErrorCode::BadParameter, "zero has no symbol value");
  const Ring ring = make_ring(p, N);
  const int v = valuation(x, p);
  const mpq_class unit = x / rational_pow(mpq_class(static_cast<unsigned long>(p)), v);
  return {v, GRElem(ring, static_cast<long long>(unit_residue(unit, ring->q))), N};
}

SymbolValue tame_at_prime(const FactoredFunction& f, const FactoredFunction& g, const DistinguishedPrime& prime, int N) {
  return rational_symbol(tame_norm(f, g, prime.pi), prime.p, N);
}

std::vector<DistinguishedPrime> distinguished_support(const FactoredFunction& f, const FactoredFunction& g, u64 p) {
  std::vector<IntPoly> polys;
  for (const FactoredFunction& h : {classify_atoms(f, p), classify_atoms(g, p)})
    for (const auto& atom : h.atoms)
      if (atom.kind == AtomKind::Monomial || atom.kind == AtomKind::Distinguished) polys.push_back(atom.poly);
  std::vector<ClosedPoint> points;
  for (const auto& pi : polys) points.push_back(ClosedPoint::distinguished(pi));
  std::sort(points.begin(), points.end(), canonical_less);
  std::vector<DistinguishedPrime> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0 && points[i].poly == points[i - 1].poly) continue;
    out.push_back(make_distinguished_prime(points[i].poly, p));
  }
  return out;
}

SymbolValue residue_via_primes(const FactoredFunction& f, const FactoredFunction& g, u64 p, int N) {
  const std::vector<DistinguishedPrime> primes = distinguished_support(f, g, p);
  const std::vector<SymbolValue> values =
      parallel_map<SymbolValue>(primes.size(), [&](std::size_t i) { return tame_at_prime(f, g, primes[i], N); });
  SymbolValue product = SymbolValue::one(make_ring(p, N));
  for (const auto& v : values) product = product * v;
  return product;
}

}  // namespace katores
