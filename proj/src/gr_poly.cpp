#include "katores/gr_poly.hpp"

#include <algorithm>

#include "katores/error.hpp"

namespace katores::grp {

void trim(GRPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

GRPoly from_int(const Ring& r, const IntPoly& f) {
  GRPoly out;
  out.reserve(f.size());
  for (const auto& c : f) out.emplace_back(r, c);
  trim(out);
  return out;
}

GRPoly from_u64(const Ring& r, const std::vector<u64>& f) {
  GRPoly out;
  out.reserve(f.size());
  for (u64 c : f) out.emplace_back(r, std::vector<u64>{c});
  trim(out);
  return out;
}

namespace {

const Ring& ring_of(const GRPoly& a, const GRPoly& b) {
  if (!a.empty()) return a.front().ring();
  return b.front().ring();
}

}  // namespace

GRPoly add(const GRPoly& a, const GRPoly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  GRPoly r(std::max(a.size(), b.size()), GRElem::zero(ring_of(a, b)));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

GRPoly sub(const GRPoly& a, const GRPoly& b) {
  if (b.empty()) return a;
  GRPoly r(std::max(a.size(), b.size()), GRElem::zero(ring_of(a, b)));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

GRPoly mul(const GRPoly& a, const GRPoly& b) {
  if (a.empty() || b.empty()) return {};
  GRPoly r(a.size() + b.size() - 1, GRElem::zero(a.front().ring()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

GRPoly scale(const GRPoly& a, const GRElem& c) {
  GRPoly r(a);
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

GRElem eval(const GRPoly& a, const GRElem& x) {
  GRElem r = GRElem::zero(x.ring());
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

std::pair<GRPoly, GRPoly> divmod(const GRPoly& a_in, const GRPoly& b) {
  if (b.empty()) throw Error(ErrorCode::NonUnitDivisor, "division by the zero polynomial");
  GRPoly r = a_in;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) return {GRPoly{}, r};
  const GRElem lead_inv = b.back().inverse();
  GRPoly q(static_cast<std::size_t>(degree(r) - db + 1), GRElem::zero(b.back().ring()));
  for (int k = degree(r); k >= db; --k) {
    const GRElem c = r[static_cast<std::size_t>(k)] * lead_inv;
    q[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= c * b[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
  return {q, r};
}

GRPoly cast(const GRPoly& a, const Ring& target) {
  GRPoly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(c.cast(target));
  trim(r);
  return r;
}

bool is_monic(const GRPoly& a) { return !a.empty() && a.back().is_one(); }

bool equal(const GRPoly& a, const GRPoly& b) {
  GRPoly x = a, y = b;
  trim(x);
  trim(y);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

ExtGcd ext_gcd(const GRPoly& a, const GRPoly& b) {
  const Ring& r = ring_of(a, b);
  if (r->N != 1) throw Error(ErrorCode::BadParameter, "ext_gcd needs a residue field");
  GRPoly r0 = a, r1 = b, s0{GRElem::one(r)}, s1{}, t0{}, t1{GRElem::one(r)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    GRPoly s = sub(s0, mul(q, s1));
    GRPoly t = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.empty()) return {r0, s0, t0};
  const GRElem inv = r0.back().inverse();
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

}  // namespace katores::grp

namespace katores {

HenselFactors hensel_lift(const GRPoly& target_in, const GRPoly& g0_in, const GRPoly& h0_in) {
  GRPoly target = target_in;
  grp::trim(target);
  if (target.empty()) throw Error(ErrorCode::BadReduction, "cannot lift a factorization of zero");
  const Ring ring = target.front().ring();
  const Ring field = residue_ring(ring);
  GRPoly g0 = grp::cast(g0_in, field), h0 = grp::cast(h0_in, field);
  if (!grp::is_monic(g0)) throw Error(ErrorCode::BadParameter, "first factor must be monic");
  if (!grp::equal(grp::cast(target, field), grp::mul(g0, h0)))
    throw Error(ErrorCode::BadReduction, "target does not reduce to g0 * h0");
  const grp::ExtGcd eg = grp::ext_gcd(g0, h0);
  if (grp::degree(eg.g) != 0) throw Error(ErrorCode::NotCoprime, "factors are not coprime mod p");

  // Linear lifting: each round fixes one more p-adic digit of g.
  const GRPoly t = grp::cast(eg.t, ring);
  GRPoly g = grp::cast(g0, ring);
  GRPoly h;
  for (int iter = 0; iter <= ring->N + 1; ++iter) {
    auto [quot, rem] = grp::divmod(target, g);
    h = std::move(quot);
    if (rem.empty()) break;
    g = grp::add(g, grp::divmod(grp::mul(t, rem), g).second);
  }
  if (!grp::equal(grp::mul(g, h), target)) throw Error(ErrorCode::BadReduction, "Hensel lifting did not converge");
  return {g, h};
}

}  // namespace katores
