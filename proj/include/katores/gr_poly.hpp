#pragma once

// Dense polynomials with Galois-ring coefficients, all in one ring.

#include <utility>
#include <vector>

#include "katores/integer.hpp"
#include "katores/ring.hpp"

namespace katores {

/// Ascending coefficients; trailing zeros trimmed, zero polynomial is empty.
using GRPoly = std::vector<GRElem>;

namespace grp {

void trim(GRPoly& a);
inline int degree(const GRPoly& a) { return static_cast<int>(a.size()) - 1; }

GRPoly from_int(const Ring& r, const IntPoly& f);
GRPoly from_u64(const Ring& r, const std::vector<u64>& f);
GRPoly add(const GRPoly& a, const GRPoly& b);
GRPoly sub(const GRPoly& a, const GRPoly& b);
GRPoly mul(const GRPoly& a, const GRPoly& b);
GRPoly scale(const GRPoly& a, const GRElem& c);
GRElem eval(const GRPoly& a, const GRElem& x);
/// Quotient and remainder by a polynomial with unit leading coefficient.
std::pair<GRPoly, GRPoly> divmod(const GRPoly& a, const GRPoly& b);
/// Coefficientwise image in another ring with the same p and d.
GRPoly cast(const GRPoly& a, const Ring& target);
bool is_monic(const GRPoly& a);
bool equal(const GRPoly& a, const GRPoly& b);

struct ExtGcd {
  GRPoly g, s, t;  // s*a + t*b = g, g monic
};
/// Extended gcd over a residue field GR(p, 1, d).
ExtGcd ext_gcd(const GRPoly& a, const GRPoly& b);

}  // namespace grp

struct HenselFactors {
  GRPoly g;  // monic, reduces to g0
  GRPoly h;  // reduces to h0
};

/// Lifts target mod p = g0 * h0 to target = g * h over the ring of target.
/// g0 and h0 live in the residue field of that ring; g0 must be monic.
/// target need not be monic: h absorbs its leading coefficient.
HenselFactors hensel_lift(const GRPoly& target, const GRPoly& g0, const GRPoly& h0);

}  // namespace katores
