#pragma once

// Random factored rational functions for the audit and oracle tests.

#include "gen.hpp"
#include "katores/factored.hpp"
#include "katores/weierstrass.hpp"

namespace gen {

using katores::AtomKind;
using katores::FactoredFunction;
using katores::IntPoly;

inline mpz_class small(Rng& rng, long bound) { return mpz_class(static_cast<long>(rng.range(-bound, bound))); }

inline long nonzero_exp(Rng& rng, long bound) {
  long e = 0;
  while (e == 0) e = static_cast<long>(rng.range(-bound, bound));
  return e;
}

/// Irreducible distinguished polynomial of degree 1 or 2 at p.
inline IntPoly distinguished(Rng& rng, u64 p) {
  const mpz_class P(static_cast<unsigned long>(p));
  while (true) {
    if (rng.coin()) {
      const mpz_class k = small(rng, 3);
      if (k != 0) return {-P * k, 1};
    } else {
      IntPoly f{P * small(rng, 3), P * small(rng, 3), 1};
      if (f[0] == 0) continue;
      try {
        katores::make_distinguished_prime(f, p);
        return f;
      } catch (const katores::Error&) {
      }
    }
  }
}

/// Polynomial of degree 1 or 2 with constant term a unit at p.
inline IntPoly unit_poly(Rng& rng, u64 p) {
  while (true) {
    IntPoly f{small(rng, 9), small(rng, 9)};
    if (rng.coin()) f.push_back(small(rng, 9));
    katores::poly::trim(f);
    if (f.size() < 2 || mpz_divisible_ui_p(f[0].get_mpz_t(), p)) continue;
    return f;
  }
}

/// Nonzero rational p^k * a / b with a, b small units at p (k = 0 when unit_only).
inline mpq_class constant(Rng& rng, u64 p, bool unit_only = false) {
  while (true) {
    const mpz_class a = small(rng, 12), b = mpz_class(static_cast<long>(rng.range(1, 12)));
    if (a == 0 || mpz_divisible_ui_p(a.get_mpz_t(), p) || mpz_divisible_ui_p(b.get_mpz_t(), p)) continue;
    mpq_class c(a, b);
    c.canonicalize();
    if (!unit_only) c *= katores::rational_pow(mpq_class(static_cast<unsigned long>(p)), static_cast<long>(rng.range(-1, 2)));
    return c;
  }
}

/// Product of up to four atoms of degree <= 2 on Spec Z_p[[T]].
inline FactoredFunction point_function(Rng& rng, u64 p) {
  FactoredFunction f = FactoredFunction::constant(constant(rng, p));
  const long n = rng.range(1, 4);
  for (long i = 0; i < n; ++i) {
    switch (rng.below(3)) {
      case 0: f = f * FactoredFunction::monomial(nonzero_exp(rng, 2)); break;
      case 1: f = f * FactoredFunction::polynomial(distinguished(rng, p), nonzero_exp(rng, 2), AtomKind::Distinguished); break;
      default: f = f * FactoredFunction::polynomial(unit_poly(rng, p), nonzero_exp(rng, 2), AtomKind::UnitPoly); break;
    }
  }
  return f;
}

/// Polynomial of degree 1 or 2 whose reduction mod p is nonzero and nonconstant.
inline IntPoly nonvanishing_poly(Rng& rng, u64 p) {
  while (true) {
    IntPoly f{small(rng, 9), small(rng, 9)};
    if (rng.coin()) f.push_back(small(rng, 9));
    katores::poly::trim(f);
    if (katores::fp::degree(katores::fp::reduce(f, p)) < 1) continue;
    return f;
  }
}

/// Unit-content function on P^1 over Z_p.
inline FactoredFunction vertical_function(Rng& rng, u64 p) {
  FactoredFunction f = FactoredFunction::constant(constant(rng, p, true));
  const long n = rng.range(1, 3);
  for (long i = 0; i < n; ++i) {
    if (rng.below(4) == 0)
      f = f * FactoredFunction::monomial(nonzero_exp(rng, 2));
    else
      f = f * FactoredFunction::polynomial(nonvanishing_poly(rng, p), nonzero_exp(rng, 2));
  }
  return f;
}

/// Product of atoms irreducible over Q, degree <= 2.
inline FactoredFunction rational_function(Rng& rng) {
  mpq_class c(small(rng, 12), mpz_class(static_cast<long>(rng.range(1, 12))));
  if (c == 0) c = 1;
  c.canonicalize();
  FactoredFunction f = FactoredFunction::constant(c);
  const long n = rng.range(1, 3);
  for (long i = 0; i < n; ++i) {
    while (true) {
      IntPoly a{small(rng, 6), small(rng, 6)};
      if (rng.coin()) a.push_back(small(rng, 6));
      katores::poly::trim(a);
      if (a.size() < 2 || katores::irreducible_over_Q(a) != std::optional<bool>(true)) continue;
      f = f * FactoredFunction::polynomial(a, nonzero_exp(rng, 2));
      break;
    }
  }
  return f;
}

/// Function on P^1 over F_q: atoms nonzero mod q, unit constants.
inline FactoredFunction fq_function(Rng& rng, u64 q) {
  FactoredFunction f = FactoredFunction::constant(constant(rng, q, true));
  const long n = rng.range(1, 3);
  for (long i = 0; i < n; ++i) {
    IntPoly a;
    while (true) {
      a = {small(rng, 9), small(rng, 9), small(rng, 9)};
      if (rng.coin()) a.push_back(small(rng, 9));
      katores::poly::trim(a);
      if (!katores::fp::reduce(a, q).empty()) break;
    }
    f = f * FactoredFunction::polynomial(a, nonzero_exp(rng, 2));
  }
  return f;
}

}  // namespace gen
