#include "katores/factored.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "katores/error.hpp"

namespace katores {

const char* to_string(AtomKind kind) {
  switch (kind) {
    case AtomKind::Constant: return "constant";
    case AtomKind::Monomial: return "monomial";
    case AtomKind::Distinguished: return "distinguished";
    case AtomKind::UnitPoly: return "unitpoly";
    case AtomKind::Poly: return "poly";
  }
  return "poly";
}

FactoredFunction FactoredFunction::constant(const mpq_class& c, long exp) {
  if (c == 0) throw Error(ErrorCode::BadParameter, "zero constant atom");
  Atom a;
  a.kind = AtomKind::Constant;
  a.constant = c;
  a.exp = exp;
  return {{a}};
}

FactoredFunction FactoredFunction::monomial(long k) {
  Atom a;
  a.kind = AtomKind::Monomial;
  a.poly = {0, 1};
  a.exp = k;
  return {{a}};
}

FactoredFunction FactoredFunction::polynomial(const IntPoly& f, long exp, AtomKind kind) {
  IntPoly g = f;
  poly::trim(g);
  if (g.empty()) throw Error(ErrorCode::BadParameter, "zero polynomial atom");
  Atom a;
  a.kind = kind;
  a.poly = g;
  a.exp = exp;
  return {{a}};
}

mpq_class FactoredFunction::leading_constant() const {
  mpq_class c = 1;
  for (const auto& a : atoms)
    if (a.kind == AtomKind::Constant) c *= rational_pow(a.constant, a.exp);
  return c;
}

FactoredFunction operator*(const FactoredFunction& a, const FactoredFunction& b) {
  FactoredFunction r = a;
  r.atoms.insert(r.atoms.end(), b.atoms.begin(), b.atoms.end());
  return r;
}

FactoredFunction inverse(const FactoredFunction& f) { return power(f, -1); }

FactoredFunction power(const FactoredFunction& f, long e) {
  FactoredFunction r = f;
  for (auto& a : r.atoms) a.exp *= e;
  return r;
}

namespace {

// Degree, then coefficients from the top down by absolute value, a positive
// coefficient before its negative.
bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == b[i]) continue;
    const int c = mpz_cmpabs(a[i].get_mpz_t(), b[i].get_mpz_t());
    if (c != 0) return c < 0;
    return a[i] > b[i];
  }
  return false;
}

}  // namespace

FactoredFunction normalize(const FactoredFunction& f) {
  mpq_class constant = 1;
  long t_exp = 0;
  std::map<IntPoly, std::pair<AtomKind, long>, decltype(&poly_less)> polys(&poly_less);
  for (const auto& a : f.atoms) {
    if (a.exp == 0) continue;
    if (a.kind == AtomKind::Constant) {
      if (a.constant == 0) throw Error(ErrorCode::BadParameter, "zero constant atom");
      constant *= rational_pow(a.constant, a.exp);
      continue;
    }
    IntPoly g = a.poly;
    poly::trim(g);
    if (g.empty()) throw Error(ErrorCode::BadParameter, "zero polynomial atom");
    if (a.kind == AtomKind::Monomial) {
      t_exp += a.exp;
      continue;
    }
    // Split off T^m, the content and the sign.
    std::size_t m = 0;
    while (g[m] == 0) ++m;
    g.erase(g.begin(), g.begin() + static_cast<long>(m));
    t_exp += static_cast<long>(m) * a.exp;
    mpz_class content = 0;
    for (const auto& c : g) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (g.back() < 0) content = -content;
    for (auto& c : g) c /= content;
    constant *= rational_pow(mpq_class(content), a.exp);
    if (g.size() == 1) continue;
    auto [it, inserted] = polys.emplace(g, std::make_pair(a.kind, a.exp));
    if (!inserted) it->second.second += a.exp;
  }
  FactoredFunction out;
  if (constant != 1) out = FactoredFunction::constant(constant);
  if (t_exp != 0) out = out * FactoredFunction::monomial(t_exp);
  for (const auto& [g, ke] : polys)
    if (ke.second != 0) out = out * FactoredFunction::polynomial(g, ke.second, ke.first);
  return out;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a_in, const IntPoly& b) {
  IntPoly a = a_in;
  poly::trim(a);
  const int n = poly::degree(b);
  if (n < 0 || b.back() != 1) throw Error(ErrorCode::BadParameter, "divisor must be monic");
  if (poly::degree(a) < n) return {IntPoly{}, a};
  IntPoly q(static_cast<std::size_t>(poly::degree(a) - n + 1));
  for (int k = poly::degree(a); k >= n; --k) {
    const mpz_class c = a[static_cast<std::size_t>(k)];
    q[static_cast<std::size_t>(k - n)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(k - n + i)] -= c * b[static_cast<std::size_t>(i)];
  }
  a.resize(static_cast<std::size_t>(n));
  poly::trim(a);
  poly::trim(q);
  return {q, a};
}

long valuation_at(const FactoredFunction& f, const IntPoly& pi) {
  long v = 0;
  for (const auto& a : f.atoms) {
    if (a.kind == AtomKind::Constant) continue;
    IntPoly g = a.poly;
    long m = 0;
    while (true) {
      auto [q, r] = divmod_monic(g, pi);
      if (!r.empty() || q.empty()) break;
      g = std::move(q);
      ++m;
    }
    v += m * a.exp;
  }
  return v;
}

std::pair<RatPoly, RatPoly> as_fraction(const FactoredFunction& f) {
  RatPoly num{mpq_class(1)}, den{mpq_class(1)};
  for (const auto& a : f.atoms) {
    if (a.kind == AtomKind::Constant) {
      num = poly::scale(num, rational_pow(a.constant, a.exp));
      continue;
    }
    RatPoly g(a.poly.begin(), a.poly.end());
    const unsigned e = static_cast<unsigned>(a.exp < 0 ? -a.exp : a.exp);
    if (a.exp > 0)
      num = poly::mul(num, poly::pow(g, e));
    else
      den = poly::mul(den, poly::pow(g, e));
  }
  return {num, den};
}

namespace {

// Terms (coefficient, exponent) from the top down, rendered as T^2 - 4*T - 5.
std::string render(const std::vector<std::pair<mpz_class, std::size_t>>& terms, const char* var) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [c, i] : terms) {
    const bool neg = c < 0;
    const mpz_class mag = neg ? mpz_class(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0 || mag != 1) out += mag.get_str() + (i == 0 ? "" : "*");
    if (i > 0) out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace

std::string poly_to_string(const IntPoly& f, const char* var) {
  std::vector<std::pair<mpz_class, std::size_t>> terms;
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) terms.emplace_back(f[i], i);
  return render(terms, var);
}

std::string poly_to_string(const fp::Poly& f, const char* var) {
  std::vector<std::pair<mpz_class, std::size_t>> terms;
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) terms.emplace_back(mpz_class(static_cast<unsigned long>(f[i])), i);
  return render(terms, var);
}

int ClosedPoint::degree() const {
  switch (kind) {
    case Kind::Fiber: return fp::degree(h);
    case Kind::Infinity: return 1;
    default: return poly::degree(poly);
  }
}

std::string ClosedPoint::descriptor() const {
  switch (kind) {
    case Kind::Fiber: return "point " + poly_to_string(h);
    case Kind::Infinity: return "infinity";
    case Kind::DistinguishedCurve: return "prime (" + poly_to_string(poly) + ")";
    case Kind::GenericFiber: return "place (" + poly_to_string(poly) + ")";
  }
  return "";
}

bool canonical_less(const ClosedPoint& a, const ClosedPoint& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.kind == ClosedPoint::Kind::Fiber) return fp::canonical_less(a.h, b.h);
  return poly_less(a.poly, b.poly);
}

}  // namespace katores
