#include "katores/expand.hpp"

#include "katores/error.hpp"
#include "katores/gr_poly.hpp"

namespace katores {

namespace {

GRPoly lift_poly(const fp::Poly& h, const Ring& ring) {
  GRPoly out;
  for (u64 c : h) out.emplace_back(ring, static_cast<long long>(c));
  return out;
}

GRPoly derivative(const GRPoly& f) {
  GRPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * GRElem(f[i].ring(), static_cast<long long>(i)));
  grp::trim(out);
  return out;
}

// Coordinates of the k-th element of F_{p^d} in base p.
GRElem enumerate_field(const Ring& field, u64 k) {
  std::vector<u64> coords(static_cast<std::size_t>(field->d));
  for (auto& c : coords) {
    c = k % field->p;
    k /= field->p;
  }
  return GRElem(field, coords);
}

GRElem residue_root(const fp::Poly& h, const Ring& ring) {
  const Ring field = residue_ring(ring);
  const u64 p = ring->p;
  if (ring->d == 1) return GRElem(field, static_cast<long long>(fp::submod(0, h[0] % p, p)));
  if (ring->modulus() == std::vector<u64>(h.begin(), h.end())) return GRElem::gen(field);
  const GRPoly hk = lift_poly(h, field);
  u64 size = 1;
  for (int i = 0; i < ring->d; ++i) size *= p;
  for (u64 k = 0; k < size; ++k) {
    const GRElem x = enumerate_field(field, k);
    if (grp::eval(hk, x).is_zero()) return x;
  }
  throw Error(ErrorCode::BadParameter, "no root of " + poly_to_string(h) + " in the residue field");
}

Series atom_series(const IntPoly& A, const ClosedPoint& point, const GRElem& root, const Ring& ring) {
  Series s;
  s.ring = ring;
  s.hi = kUnbounded;
  if (point.kind == ClosedPoint::Kind::Infinity) {
    // A(1/u) = u^{-deg A} * reversed(A)(u)
    s.lo = -poly::degree(A);
    for (std::size_t i = A.size(); i-- > 0;) s.c.emplace_back(ring, A[i]);
    return s;
  }
  // Horner in (root + u).
  const GRPoly shift{root, GRElem::one(ring)};
  GRPoly b;
  for (std::size_t i = A.size(); i-- > 0;) b = grp::add(grp::mul(b, shift), GRPoly{GRElem(ring, A[i])});
  s.lo = 0;
  s.c = b;
  return s;
}

}  // namespace

GRElem lift_root(const fp::Poly& h, const Ring& ring) {
  if (fp::degree(h) != ring->d) throw Error(ErrorCode::BadParameter, "ring degree must equal the degree of the point");
  GRElem x = residue_root(h, ring).cast(ring);
  const GRPoly H = lift_poly(h, ring), dH = derivative(H);
  for (int k = 0; k < ring->N; ++k) x = x - grp::eval(H, x) * grp::eval(dH, x).inverse();
  return x;
}

LaurentUnit expand_at_point(const FactoredFunction& F_in, const ClosedPoint& point, const Ring& ring, long window) {
  if (point.kind != ClosedPoint::Kind::Fiber && point.kind != ClosedPoint::Kind::Infinity)
    throw Error(ErrorCode::BadParameter, "expansions are taken at points of the special fiber");
  const GRElem root = (point.kind == ClosedPoint::Kind::Fiber) ? lift_root(point.h, ring) : GRElem::zero(ring);
  const FactoredFunction F = normalize(F_in);
  LaurentUnit out = lau_constant(GRElem::one(ring));
  for (const auto& atom : F.atoms) {
    if (atom.kind == AtomKind::Constant) {
      const int v = valuation(atom.constant, ring->p);
      const mpq_class unit = atom.constant / rational_pow(mpq_class(static_cast<unsigned long>(ring->p)), v);
      const GRElem c(ring, static_cast<long long>(unit_residue(unit, ring->q)));
      out = lau_mul(out, lau_pow(lau_constant(c, v), atom.exp));
      continue;
    }
    const LaurentUnit a = lau_split(atom_series(atom.poly, point, root, ring), 0, window);
    out = lau_mul(out, lau_pow(a, atom.exp));
  }
  return out;
}

}  // namespace katores
