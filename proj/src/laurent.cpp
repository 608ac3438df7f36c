#include "katores/laurent.hpp"

#include <algorithm>

#include "katores/error.hpp"

namespace katores {

namespace {

using Vec = std::vector<GRElem>;

bool is_exact(long hi) { return hi >= kExactWindow; }

long sat_add(long a, long b) {
  if (a >= kUnbounded) return kUnbounded;
  return a + b;
}

void trim(Vec& a) {
  while (a.size() > 1 && a.back().is_zero()) a.pop_back();
}

bool is_trivial(const Vec& a) { return a.size() == 1 && a[0].is_one(); }

// Power series product modulo T^(hi + 1).
Vec ps_mul(const Vec& a, const Vec& b, long hi) {
  const std::size_t len = std::min<std::size_t>(a.size() + b.size() - 1, static_cast<std::size_t>(std::min(hi, 1L << 40)) + 1);
  Vec r(len, GRElem::zero(a.front().ring()));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Power series inverse modulo T^(hi + 1); a[0] must be a unit.
Vec ps_inv(const Vec& a, long hi) {
  const GRElem inv0 = a.front().inverse();
  if (a.size() == 1) return {inv0};
  if (is_exact(hi)) throw Error(ErrorCode::BadParameter, "inverting a series needs a finite window");
  const std::size_t len = static_cast<std::size_t>(hi) + 1;
  Vec r(len, GRElem::zero(a.front().ring()));
  r[0] = inv0;
  for (std::size_t k = 1; k < len; ++k) {
    GRElem acc = GRElem::zero(a.front().ring());
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * r[k - j];
    r[k] = -(acc * inv0);
  }
  trim(r);
  return r;
}

// Exact product of polynomials in T^{-1}.
Vec nil_mul(const Vec& a, const Vec& b) {
  Vec r(a.size() + b.size() - 1, GRElem::zero(a.front().ring()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Exact inverse of 1 + N with N nilpotent: the geometric series stops at N^(prec-1).
Vec nil_inv(const Vec& a) {
  if (a.size() == 1) return {a[0].inverse()};
  const Ring& r = a.front().ring();
  Vec x(a.size(), GRElem::zero(r));
  for (std::size_t k = 1; k < a.size(); ++k) x[k] = -a[k];
  Vec inv{GRElem::one(r)}, term{GRElem::one(r)};
  for (int k = 1; k < r->N; ++k) {
    term = nil_mul(term, x);
    if (term.size() == 1 && term[0].is_zero()) break;
    Vec sum(std::max(inv.size(), term.size()), GRElem::zero(r));
    for (std::size_t i = 0; i < inv.size(); ++i) sum[i] += inv[i];
    for (std::size_t i = 0; i < term.size(); ++i) sum[i] += term[i];
    inv = std::move(sum);
  }
  trim(inv);
  return inv;
}

void require_same(const LaurentUnit& f, const LaurentUnit& g) {
  if (!same_ring(f.ring, g.ring)) throw Error(ErrorCode::MixedRings, "series over different rings");
}

}  // namespace

GRElem Series::at(long e) const {
  const long k = e - lo;
  if (k < 0 || k >= static_cast<long>(c.size())) return GRElem::zero(ring);
  return c[static_cast<std::size_t>(k)];
}

void Series::normalize() {
  if (hi < kUnbounded && static_cast<long>(c.size()) > hi - lo + 1)
    c.resize(static_cast<std::size_t>(std::max(0L, hi - lo + 1)));
  std::size_t skip = 0;
  while (skip < c.size() && c[skip].is_zero()) ++skip;
  if (skip == c.size()) {
    c.clear();
    return;
  }
  c.erase(c.begin(), c.begin() + static_cast<long>(skip));
  lo += static_cast<long>(skip);
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Series series_mul(const Series& a, const Series& b) {
  if (!same_ring(a.ring, b.ring)) throw Error(ErrorCode::MixedRings, "series over different rings");
  Series r;
  r.ring = a.ring;
  r.lo = a.lo + b.lo;
  r.hi = std::min(sat_add(a.hi, b.lo), sat_add(b.hi, a.lo));
  if (a.c.empty() || b.c.empty()) return r;
  std::size_t len = a.c.size() + b.c.size() - 1;
  if (r.hi < kUnbounded) len = std::min<std::size_t>(len, static_cast<std::size_t>(std::max(0L, r.hi - r.lo + 1)));
  r.c.assign(len, GRElem::zero(a.ring));
  for (std::size_t i = 0; i < a.c.size() && i < len; ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size() && i + j < len; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.normalize();
  return r;
}

Series series_add(const Series& a, const Series& b) {
  if (!same_ring(a.ring, b.ring)) throw Error(ErrorCode::MixedRings, "series over different rings");
  if (a.c.empty()) return Series{a.ring, b.lo, std::min(a.hi, b.hi), b.c};
  if (b.c.empty()) return Series{a.ring, a.lo, std::min(a.hi, b.hi), a.c};
  Series r;
  r.ring = a.ring;
  r.lo = std::min(a.lo, b.lo);
  r.hi = std::min(a.hi, b.hi);
  const long top = std::max(a.lo + static_cast<long>(a.c.size()), b.lo + static_cast<long>(b.c.size()));
  r.c.assign(static_cast<std::size_t>(top - r.lo), GRElem::zero(a.ring));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[static_cast<std::size_t>(a.lo - r.lo) + i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[static_cast<std::size_t>(b.lo - r.lo) + i] += b.c[i];
  r.normalize();
  return r;
}

Series series_scale(const Series& a, const GRElem& s) {
  Series r = a;
  for (auto& x : r.c) x *= s;
  r.normalize();
  return r;
}

Series LaurentUnit::coefficients() const {
  Series s;
  s.ring = ring;
  const long D = neg_degree();
  s.lo = w - D;
  s.hi = is_exact(pos_hi) ? kUnbounded : w + pos_hi - D;
  // Coefficient of T^(w+k) is c * sum_j neg[j] pos[k+j].
  const long top = static_cast<long>(pos.size()) - 1;
  const long kmax = is_exact(pos_hi) ? top : std::min(top, pos_hi - D);
  if (kmax < -D) return s;
  s.c.assign(static_cast<std::size_t>(kmax + D + 1), GRElem::zero(ring));
  for (long k = -D; k <= kmax; ++k) {
    GRElem acc = GRElem::zero(ring);
    for (long j = std::max(0L, -k); j <= D && k + j <= top; ++j)
      acc += neg[static_cast<std::size_t>(j)] * pos[static_cast<std::size_t>(k + j)];
    s.c[static_cast<std::size_t>(k + D)] = c * acc;
  }
  s.normalize();
  return s;
}

LaurentUnit lau_split(const Series& h_in, long p_exp, long pos_cap) {
  Series h = h_in;
  h.normalize();
  const Ring& R = h.ring;
  if (h.hi >= kUnbounded && pos_cap >= kUnbounded)
    throw Error(ErrorCode::BadParameter, "an exact series needs a window cap to split");
  long w = 0;
  bool found = false;
  for (std::size_t k = 0; k < h.c.size(); ++k) {
    if (h.lo + static_cast<long>(k) > h.hi) break;
    if (h.c[k].is_unit()) {
      w = h.lo + static_cast<long>(k);
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::NotAUnit, "no coefficient in the window is a unit");

  // Work with h' = h T^{-w}: exponent e of h' sits at h.c[e + D].
  const long D = w - h.lo;
  const long hi_rel = h.hi >= kUnbounded ? kUnbounded : h.hi - w;
  const long top_rel = static_cast<long>(h.c.size()) - 1 - D;
  auto hp = [&](long e) -> GRElem {
    const long k = e + D;
    if (k < 0 || k >= static_cast<long>(h.c.size())) return GRElem::zero(R);
    return h.c[static_cast<std::size_t>(k)];
  };

  GRElem c = hp(0);
  Vec M{GRElem::one(R)};
  for (int iter = 0; iter <= 2 * R->N + 4; ++iter) {
    const Vec Minv = nil_inv(M);
    const long Dinv = static_cast<long>(Minv.size()) - 1;
    const long lo_q = -D - Dinv;
    const long hi_q = hi_rel >= kUnbounded ? kUnbounded : hi_rel - Dinv;
    if (hi_q < 0) throw Error(ErrorCode::WindowUnderflow, "window too short to split the series");
    const long top_q = std::min(hi_q, std::max(top_rel, 0L));
    const GRElem cinv = c.inverse();
    Vec q(static_cast<std::size_t>(top_q - lo_q + 1), GRElem::zero(R));
    for (long e = lo_q; e <= top_q; ++e) {
      GRElem acc = GRElem::zero(R);
      for (long j = 0; j <= Dinv; ++j) acc += Minv[static_cast<std::size_t>(j)] * hp(e + j);
      q[static_cast<std::size_t>(e - lo_q)] = acc * cinv;
    }
    auto qa = [&](long e) -> const GRElem& { return q[static_cast<std::size_t>(e - lo_q)]; };

    bool done = qa(0).is_one();
    for (long e = lo_q; done && e < 0; ++e) done = qa(e).is_zero();
    if (done) {
      LaurentUnit f;
      f.ring = R;
      f.p_exp = p_exp;
      f.c = c;
      f.w = w;
      f.neg = M;
      f.pos_hi = std::min(hi_q, pos_cap);
      const long keep = std::min(top_q, f.pos_hi);
      f.pos.assign(q.begin() + static_cast<long>(-lo_q), q.begin() + static_cast<long>(keep - lo_q + 1));
      trim(f.pos);
      return f;
    }

    // Correction: e = q / (q_{>=0} / q_0); its part of degree <= 0 updates c and N.
    const long need = -lo_q;
    if (hi_q < need) throw Error(ErrorCode::WindowUnderflow, "window too short to split the series");
    const GRElem q0inv = qa(0).inverse();
    Vec papprox(static_cast<std::size_t>(need + 1), GRElem::zero(R));
    for (long j = 0; j <= need && j <= top_q; ++j) papprox[static_cast<std::size_t>(j)] = qa(j) * q0inv;
    trim(papprox);
    const Vec pinv = ps_inv(papprox, need);
    auto pinv_at = [&](long j) {
      return j < static_cast<long>(pinv.size()) ? pinv[static_cast<std::size_t>(j)] : GRElem::zero(R);
    };
    Vec err(static_cast<std::size_t>(need + 1), GRElem::zero(R));  // err[k] = e_{-k}
    for (long k = lo_q; k <= 0; ++k) {
      GRElem acc = GRElem::zero(R);
      for (long j = 0; j <= k - lo_q; ++j) acc += qa(k - j) * pinv_at(j);
      err[static_cast<std::size_t>(-k)] = acc;
    }
    const GRElem e0inv = err[0].inverse();
    c *= err[0];
    Vec factor(static_cast<std::size_t>(std::min(D, need) + 1), GRElem::zero(R));
    factor[0] = GRElem::one(R);
    for (long k = 1; k <= std::min(D, need); ++k) factor[static_cast<std::size_t>(k)] = err[static_cast<std::size_t>(k)] * e0inv;
    M = nil_mul(M, factor);
    if (static_cast<long>(M.size()) > D + 1) M.resize(static_cast<std::size_t>(D + 1));
    trim(M);
  }
  throw Error(ErrorCode::PrecisionExhausted, "splitting the series did not converge");
}

LaurentUnit lau_make(const Ring& ring, long p_exp, const std::map<long, GRElem>& coeffs, long lo, long hi) {
  if (lo > hi) throw Error(ErrorCode::BadParameter, "empty window");
  if (coeffs.empty()) throw Error(ErrorCode::BadParameter, "empty coefficient list");
  Series h;
  h.ring = ring;
  h.lo = lo;
  h.hi = hi;
  for (const auto& [e, v] : coeffs) {
    if (e < lo || e > hi) throw Error(ErrorCode::BadParameter, "coefficient outside the declared window");
    if (!same_ring(v.ring(), ring)) throw Error(ErrorCode::MixedRings, "coefficient from another ring");
  }
  h.c.assign(static_cast<std::size_t>(coeffs.rbegin()->first - lo + 1), GRElem::zero(ring));
  for (const auto& [e, v] : coeffs) h.c[static_cast<std::size_t>(e - lo)] = v;
  return lau_split(h, p_exp);
}

LaurentUnit lau_constant(const GRElem& c, long p_exp, long pos_hi) {
  if (!c.is_unit()) throw Error(ErrorCode::NotAUnit, "constant " + c.to_string() + " is not a unit");
  LaurentUnit f;
  f.ring = c.ring();
  f.p_exp = p_exp;
  f.c = c;
  f.w = 0;
  f.neg = {GRElem::one(f.ring)};
  f.pos = {GRElem::one(f.ring)};
  f.pos_hi = pos_hi;
  return f;
}

LaurentUnit lau_monomial(const Ring& ring, long w, long pos_hi) {
  LaurentUnit f = lau_constant(GRElem::one(ring), 0, pos_hi);
  f.w = w;
  return f;
}

LaurentUnit lau_mul(const LaurentUnit& f, const LaurentUnit& g) {
  require_same(f, g);
  LaurentUnit r;
  r.ring = f.ring;
  r.p_exp = f.p_exp + g.p_exp;
  r.c = f.c * g.c;
  r.w = f.w + g.w;
  r.neg = nil_mul(f.neg, g.neg);
  r.pos_hi = std::min(f.pos_hi, g.pos_hi);
  r.pos = ps_mul(f.pos, g.pos, r.pos_hi);
  return r;
}

LaurentUnit lau_inv(const LaurentUnit& f) {
  LaurentUnit r;
  r.ring = f.ring;
  r.p_exp = -f.p_exp;
  r.c = f.c.inverse();
  r.w = -f.w;
  r.neg = nil_inv(f.neg);
  r.pos_hi = f.pos_hi;
  r.pos = ps_inv(f.pos, f.pos_hi);
  return r;
}

LaurentUnit lau_div(const LaurentUnit& f, const LaurentUnit& g) {
  require_same(f, g);
  return lau_mul(f, lau_inv(g));
}

LaurentUnit lau_pow(const LaurentUnit& f, long e) {
  if (e < 0) return lau_pow(lau_inv(f), -e);
  LaurentUnit result = lau_constant(GRElem::one(f.ring), 0, f.pos_hi);
  LaurentUnit base = f;
  while (e) {
    if (e & 1) result = lau_mul(result, base);
    e >>= 1;
    if (e) base = lau_mul(base, base);
  }
  return result;
}

LaurentUnit lau_truncate(const LaurentUnit& f, long pos_hi) {
  LaurentUnit r = f;
  if (pos_hi >= r.pos_hi) return r;
  if (pos_hi < 0) throw Error(ErrorCode::WindowUnderflow, "negative truncation");
  r.pos_hi = pos_hi;
  if (static_cast<long>(r.pos.size()) > pos_hi + 1) r.pos.resize(static_cast<std::size_t>(pos_hi + 1));
  trim(r.pos);
  return r;
}

LaurentUnit lau_arith(const LaurentUnit& f, const LaurentUnit& g, LauOp op) {
  return op == LauOp::Mul ? lau_mul(f, g) : lau_div(f, g);
}

long winding_number(const LaurentUnit& f) { return f.w; }

bool lau_equal(const LaurentUnit& f, const LaurentUnit& g) {
  if (!same_ring(f.ring, g.ring)) return false;
  if (f.p_exp != g.p_exp || f.w != g.w || f.c != g.c) return false;
  if (f.neg.size() != g.neg.size()) return false;
  for (std::size_t i = 0; i < f.neg.size(); ++i)
    if (f.neg[i] != g.neg[i]) return false;
  const long hi = std::min(f.pos_hi, g.pos_hi);
  const long len = std::min<long>(hi + 1, static_cast<long>(std::max(f.pos.size(), g.pos.size())));
  for (long k = 0; k < len; ++k) {
    const GRElem a = k < static_cast<long>(f.pos.size()) ? f.pos[static_cast<std::size_t>(k)] : GRElem::zero(f.ring);
    const GRElem b = k < static_cast<long>(g.pos.size()) ? g.pos[static_cast<std::size_t>(k)] : GRElem::zero(f.ring);
    if (a != b) return false;
  }
  return true;
}

WittData witt_decompose(const LaurentUnit& f) {
  const Ring& R = f.ring;
  WittData out;
  out.w = f.w;
  out.f0 = f.c;
  out.p_exp = f.p_exp;
  out.pos_hi = f.pos_hi;

  // Negative part: divide by (1 - a T^{-i}) for i = 1, 2, ...; exact because a is nilpotent.
  Vec q = f.neg;
  for (long i = 1; !is_trivial(q); ++i) {
    if (i > 1000000) throw Error(ErrorCode::PrecisionExhausted, "negative peeling did not terminate");
    if (i >= static_cast<long>(q.size())) throw Error(ErrorCode::BadParameter, "malformed negative part");
    const GRElem a = -q[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    out.neg.push_back({i, a});
    // Quotient degree grows by at most i per nonvanishing power of a.
    std::size_t len = q.size();
    GRElem ak = a;
    for (int k = 1; k < R->N && !ak.is_zero(); ++k, ak *= a) len += static_cast<std::size_t>(i);
    Vec next(len, GRElem::zero(R));
    for (std::size_t k = 0; k < len; ++k) {
      next[k] = k < q.size() ? q[k] : GRElem::zero(R);
      if (k >= static_cast<std::size_t>(i)) next[k] += a * next[k - static_cast<std::size_t>(i)];
    }
    trim(next);
    q = std::move(next);
  }

  // Positive part: divide by (1 - a T^i) for i = 1 .. pos_hi.
  Vec pq = f.pos;
  if (!is_trivial(pq)) {
    if (is_exact(f.pos_hi)) throw Error(ErrorCode::BadParameter, "positive peeling needs a finite window");
    pq.resize(static_cast<std::size_t>(f.pos_hi) + 1, GRElem::zero(R));
    for (long i = 1; i <= f.pos_hi; ++i) {
      const GRElem a = -pq[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      out.pos.push_back({i, a});
      for (std::size_t k = static_cast<std::size_t>(i); k < pq.size(); ++k)
        pq[k] += a * pq[k - static_cast<std::size_t>(i)];
    }
  }
  return out;
}

LaurentUnit witt_recompose(const WittData& data, const Ring& ring) {
  LaurentUnit f = lau_constant(data.f0, data.p_exp, data.pos_hi);
  f.w = data.w;
  for (const auto& [i, a] : data.neg) {
    Vec factor(static_cast<std::size_t>(i) + 1, GRElem::zero(ring));
    factor[0] = GRElem::one(ring);
    factor.back() = -a;
    f.neg = nil_mul(f.neg, factor);
  }
  for (const auto& [i, a] : data.pos) {
    if (i > data.pos_hi) continue;
    Vec factor(static_cast<std::size_t>(i) + 1, GRElem::zero(ring));
    factor[0] = GRElem::one(ring);
    factor.back() = -a;
    f.pos = ps_mul(f.pos, factor, data.pos_hi);
  }
  return f;
}

LaurentUnit reparametrize(const LaurentUnit& f, const LaurentUnit& t) {
  require_same(f, t);
  if (t.w != 1 || t.p_exp != 0) throw Error(ErrorCode::BadParameter, "parameter must have winding number 1 and no p-prefactor");
  const Ring& R = f.ring;
  const Series raw = f.coefficients();
  // Terms of f beyond its window hit T-exponents >= hi + 1 - (N-1) deg N_t.
  const long tail = static_cast<long>(R->N - 1) * t.neg_degree();
  Series sum;
  sum.ring = R;
  sum.lo = raw.lo;
  sum.hi = raw.hi >= kUnbounded ? kUnbounded : raw.hi - tail;
  if (!raw.c.empty()) {
    LaurentUnit tk = lau_pow(t, raw.lo);
    for (std::size_t k = 0; k < raw.c.size(); ++k) {
      if (!raw.c[k].is_zero()) sum = series_add(sum, series_scale(tk.coefficients(), raw.c[k]));
      if (k + 1 < raw.c.size()) tk = lau_mul(tk, t);
    }
  }
  return lau_split(sum, f.p_exp, std::min(f.pos_hi, t.pos_hi));
}

}  // namespace katores
