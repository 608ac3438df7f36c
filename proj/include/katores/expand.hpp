#pragma once

// Laurent expansions of factored rational functions at closed points of the
// special fiber of P^1 over Z_p.

#include "katores/factored.hpp"
#include "katores/laurent.hpp"

namespace katores {

/// A root of the monic irreducible h (over F_p, deg h = ring degree) in the
/// residue field of ring, Hensel-lifted to ring. Uses the generator when the
/// ring modulus reduces to h.
GRElem lift_root(const fp::Poly& h, const Ring& ring);

/// Expansion of F in u = T - root (finite points) or u = 1/T (infinity).
/// window bounds the power-series part of every factor.
LaurentUnit expand_at_point(const FactoredFunction& F, const ClosedPoint& point, const Ring& ring, long window);

}  // namespace katores
