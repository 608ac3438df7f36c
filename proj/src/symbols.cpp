#include "katores/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "katores/error.hpp"

namespace katores {

SymbolValue SymbolValue::one(const Ring& r) { return {0, GRElem::one(r), r->N}; }

std::string SymbolValue::to_string() const {
  std::ostringstream os;
  if (p_val != 0) os << "p^" << p_val << " * ";
  os << unit.to_string() << " (mod p^" << prec << ")";
  return os.str();
}

SymbolValue operator*(const SymbolValue& a, const SymbolValue& b) {
  if (!same_ring(a.unit.ring(), b.unit.ring())) throw Error(ErrorCode::MixedRings, "symbol values over different rings");
  return {a.p_val + b.p_val, a.unit * b.unit, std::min(a.prec, b.prec)};
}

SymbolValue sv_inverse(const SymbolValue& a) { return {-a.p_val, a.unit.inverse(), a.prec}; }

SymbolValue sv_pow(const SymbolValue& a, long e) { return {a.p_val * e, a.unit.pow(static_cast<long long>(e)), a.prec}; }

bool unit_congruent(const GRElem& a, const GRElem& b, int n) { return (a - b).valuation() >= n; }

bool sv_is_one(const SymbolValue& a) {
  return a.p_val == 0 && unit_congruent(a.unit, GRElem::one(a.unit.ring()), a.prec);
}

bool sv_equal(const SymbolValue& a, const SymbolValue& b) {
  return a.p_val == b.p_val && unit_congruent(a.unit, b.unit, std::min(a.prec, b.prec));
}

namespace {

GRElem sign(const Ring& r, long e) { return (e % 2 == 0) ? GRElem::one(r) : -GRElem::one(r); }

struct PairProduct {
  GRElem value;
  int prec;
};

// prod over i in pos(x), j in neg(y) of (1 - x_i^{j/d} y_{-j}^{i/d})^d, d = gcd(i, j).
// Positive parameters of x are known only for i <= x.pos_hi; the missing
// factors are 1 modulo y_{-j}^{ceil((pos_hi + 1) / j)}, which bounds prec.
PairProduct pair_product(const WittData& x, const WittData& y, const Ring& r) {
  GRElem value = GRElem::one(r);
  int prec = r->N;
  for (const auto& [j, yneg] : y.neg) {
    for (const auto& [i, xpos] : x.pos) {
      const long d = std::gcd(i, j);
      const GRElem nil = yneg.pow(static_cast<long long>(i / d));
      if (nil.is_zero()) continue;
      const GRElem term = GRElem::one(r) - xpos.pow(static_cast<long long>(j / d)) * nil;
      value *= term.pow(static_cast<long long>(d));
    }
    if (x.pos_hi < kExactWindow) {
      const long k = (x.pos_hi + 1 + j - 1) / j;
      prec = std::min(prec, yneg.pow(static_cast<long long>(k)).valuation());
    }
  }
  return {value, prec};
}

}  // namespace

SymbolValue contou_carrere(const LaurentUnit& f, const LaurentUnit& g) {
  if (!same_ring(f.ring, g.ring)) throw Error(ErrorCode::MixedRings, "series over different rings");
  if (f.p_exp != 0 || g.p_exp != 0)
    throw Error(ErrorCode::NonzeroPrefactor, "the Contou-Carrere symbol needs prefactor-free arguments");
  const Ring& r = f.ring;
  const WittData wf = witt_decompose(f), wg = witt_decompose(g);
  GRElem value = sign(r, wf.w * wg.w) * wf.f0.pow(static_cast<long long>(wg.w)) * wg.f0.pow(static_cast<long long>(-wf.w));
  const PairProduct num = pair_product(wf, wg, r);  // (1 - f_i g_{-j})
  const PairProduct den = pair_product(wg, wf, r);  // (1 - f_{-i} g_j)
  value *= num.value * den.value.inverse();
  return {0, value, std::min(num.prec, den.prec)};
}

SymbolValue kato_symbol(const LaurentUnit& f, const LaurentUnit& g) {
  if (!same_ring(f.ring, g.ring)) throw Error(ErrorCode::MixedRings, "series over different rings");
  const Ring& r = f.ring;
  const WittData wf = witt_decompose(f), wg = witt_decompose(g);
  // Leading units include p^p_exp; the p-parts combine to p^(p_g w_f - p_f w_g).
  GRElem value = sign(r, wf.w * wg.w) * wg.f0.pow(static_cast<long long>(wf.w)) * wf.f0.pow(static_cast<long long>(-wg.w));
  const PairProduct a = pair_product(wg, wf, r);  // (1 - f_{-i} g_j)
  const PairProduct b = pair_product(wf, wg, r);  // (1 - f_i g_{-j})
  value *= a.value * b.value.inverse();
  return {wg.p_exp * wf.w - wf.p_exp * wg.w, value, std::min(a.prec, b.prec)};
}

GRElem tame_boundary(const LaurentUnit& f, const LaurentUnit& g) {
  if (!same_ring(f.ring, g.ring)) throw Error(ErrorCode::MixedRings, "series over different rings");
  if (f.p_exp != 0 || g.p_exp != 0) throw Error(ErrorCode::NonzeroPrefactor, "tame symbol needs unit-content arguments");
  const Ring k = residue_ring(f.ring);
  const GRElem cf = f.c.cast(k), cg = g.c.cast(k);
  return sign(k, f.w * g.w) * cf.pow(static_cast<long long>(g.w)) * cg.pow(static_cast<long long>(-f.w));
}

std::pair<GRElem, GRElem> specialize(const LaurentUnit& f, const LaurentUnit& g) {
  const Ring k = residue_ring(f.ring);
  return {f.c.cast(k), g.c.cast(k)};
}

}  // namespace katores
