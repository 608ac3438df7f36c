#pragma once

// Weierstrass preparation of polynomials over Z/p^N, resultants, and the
// boundary-then-norm symbols at distinguished primes of Z_p[[T]].

#include <vector>

#include "katores/factored.hpp"
#include "katores/gr_poly.hpp"
#include "katores/symbols.hpp"

namespace katores {

/// f = p^p_val * f0 * (a / b) * u with a, b distinguished and u(0) = 1.
/// Polynomial inputs always give b = 1 and a polynomial u.
struct PreparedForm {
  long p_val = 0;
  GRElem f0;
  GRPoly a;
  GRPoly b;
  GRPoly u;

  /// Degree of a; the winding number of f.
  int degree() const { return grp::degree(a); }
};

/// Throws AllCoeffsNonUnit if f vanishes mod p.
PreparedForm prepare(const GRPoly& f, long p_val = 0);
/// Exact integer input: the p-part of the content moves into p_val first.
PreparedForm prepare(const IntPoly& f, u64 p, int N);

/// Res(A, B) = prod_{A(alpha) = 0} B(alpha) for monic A.
GRElem resultant(const GRPoly& monic_a, const GRPoly& b);

struct DistinguishedPrime {
  IntPoly pi;
  int degree = 0;
  u64 p = 0;
  bool asserted = false;  // irreducibility trusted, not checked (degree >= 4)
};

/// Validates monic, non-leading coefficients divisible by p, and
/// irreducibility over Q_p up to degree 3. Throws BadParameter.
DistinguishedPrime make_distinguished_prime(const IntPoly& pi, u64 p);

/// Rewrites every polynomial atom relative to p as either a UnitPoly (a
/// unit of Z_p[[T]]) or a Distinguished prime. A polynomial that is neither
/// is split by exact Weierstrass preparation when its distinguished factor
/// has integer coefficients; otherwise BadParameter.
FactoredFunction classify_atoms(const FactoredFunction& f, u64 p);

/// Norm to Q of (-1)^{ab} f1^b / g1^a in Q[T]/(pi) for a monic irreducible
/// integer pi, with a, b the pi-adic valuations. Exact.
mpq_class tame_norm(const FactoredFunction& f, const FactoredFunction& g, const IntPoly& monic_pi);

/// p^v * unit in Z/p^N for a nonzero rational, certified to full precision.
SymbolValue rational_symbol(const mpq_class& x, u64 p, int N);

SymbolValue tame_at_prime(const FactoredFunction& f, const FactoredFunction& g, const DistinguishedPrime& prime, int N);

/// Distinguished primes in the supports of f and g, canonically ordered.
std::vector<DistinguishedPrime> distinguished_support(const FactoredFunction& f, const FactoredFunction& g, u64 p);

/// Product of tame_at_prime over the distinguished support.
SymbolValue residue_via_primes(const FactoredFunction& f, const FactoredFunction& g, u64 p, int N);

}  // namespace katores
