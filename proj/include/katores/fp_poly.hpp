#pragma once

// Dense polynomials over the prime field F_p, coefficients in [0, p).

#include <cstdint>
#include <utility>
#include <vector>

#include "katores/integer.hpp"

namespace katores::fp {

using u64 = std::uint64_t;
/// Ascending coefficients; the zero polynomial is empty.
using Poly = std::vector<u64>;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}
inline u64 addmod(u64 a, u64 b, u64 m) {
  const u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }
u64 powmod(u64 a, u64 e, u64 m);
/// Inverse of a modulo m (m not necessarily prime); throws NonUnitDivisor.
u64 invmod(u64 a, u64 m);

void trim(Poly& a);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const IntPoly& f, u64 p);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);
Poly monic(const Poly& a, u64 p);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
/// Monic gcd (empty if both inputs are zero).
Poly gcd(Poly a, Poly b, u64 p);

struct ExtGcd {
  Poly g, s, t;  // s*a + t*b = g, g monic
};
ExtGcd ext_gcd(const Poly& a, const Poly& b, u64 p);

/// base^e mod m.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, u64 p);

/// Rabin's test; f of degree >= 1.
bool is_irreducible(const Poly& f, u64 p);

struct Factorization {
  u64 lead = 0;
  std::vector<std::pair<Poly, int>> factors;  // monic irreducibles, canonical order
};
/// Factorization of a nonzero polynomial by trial division with irreducibles
/// of increasing degree. Meant for the small degrees of desk-scale inputs.
Factorization factor(const Poly& f, u64 p);

/// All monic irreducibles of degree d in lexicographic coefficient order
/// (compared from the leading coefficient down).
std::vector<Poly> monic_irreducibles(u64 p, int d);

/// Canonical order: degree first, then coefficients from the top down.
bool canonical_less(const Poly& a, const Poly& b);

}  // namespace katores::fp
