#pragma once

// Rational functions in T given as formal products of atoms, and the closed
// points of the desk-scale models they are evaluated at.

#include <string>
#include <vector>

#include "katores/fp_poly.hpp"
#include "katores/integer.hpp"

namespace katores {

enum class AtomKind {
  Constant,       // nonzero rational
  Monomial,       // T (the exponent carries k in T^k)
  Distinguished,  // monic, non-leading coefficients divisible by p, irreducible over Q_p
  UnitPoly,       // integer polynomial whose constant term is a p-adic unit
  Poly,           // any integer polynomial; classified on demand
};

const char* to_string(AtomKind kind);

struct Atom {
  AtomKind kind = AtomKind::Poly;
  mpq_class constant = 1;  // Constant atoms only
  IntPoly poly;            // polynomial atoms; Monomial atoms hold {0, 1}
  long exp = 1;
};

struct FactoredFunction {
  std::vector<Atom> atoms;

  static FactoredFunction constant(const mpq_class& c, long exp = 1);
  static FactoredFunction monomial(long k);
  static FactoredFunction polynomial(const IntPoly& f, long exp = 1, AtomKind kind = AtomKind::Poly);

  /// The rational constant in front once normalized.
  mpq_class leading_constant() const;
};

FactoredFunction operator*(const FactoredFunction& a, const FactoredFunction& b);
FactoredFunction inverse(const FactoredFunction& f);
FactoredFunction power(const FactoredFunction& f, long e);

/// Canonical form: a single constant atom (omitted when 1), polynomial atoms
/// primitive with positive leading coefficient, powers of T split off into a
/// Monomial atom, identical polynomials merged, zero exponents dropped.
FactoredFunction normalize(const FactoredFunction& f);

/// Exact multiplicity of the monic irreducible pi in f (may be negative).
long valuation_at(const FactoredFunction& f, const IntPoly& monic_pi);

/// Exact quotient and remainder by a monic integer polynomial.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic_b);

/// Numerator and denominator polynomials (constant folded into the numerator).
std::pair<RatPoly, RatPoly> as_fraction(const FactoredFunction& f);

std::string poly_to_string(const IntPoly& f, const char* var = "T");
std::string poly_to_string(const fp::Poly& f, const char* var = "T");

/// Closed points used by the local symbols and the audits.
struct ClosedPoint {
  enum class Kind { Fiber, Infinity, DistinguishedCurve, GenericFiber };
  Kind kind = Kind::Fiber;
  fp::Poly h;   // Fiber: monic irreducible over F_p
  IntPoly poly; // DistinguishedCurve: distinguished prime; GenericFiber: irreducible over Q (or F_q)

  static ClosedPoint fiber(const fp::Poly& h) { return {Kind::Fiber, h, {}}; }
  static ClosedPoint infinity() { return {Kind::Infinity, {}, {}}; }
  static ClosedPoint distinguished(const IntPoly& pi) { return {Kind::DistinguishedCurve, {}, pi}; }
  static ClosedPoint generic(const IntPoly& m) { return {Kind::GenericFiber, {}, m}; }

  int degree() const;
  std::string descriptor() const;
};

/// Sorted by kind, then degree, then coefficients from the top down (integer
/// coefficients by absolute value, positive first).
bool canonical_less(const ClosedPoint& a, const ClosedPoint& b);

}  // namespace katores
