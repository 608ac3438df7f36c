#pragma once

// Units of R((T)) for R = GR(p^N, d), with an explicit power of p in front.
//
// A LaurentUnit is kept in its canonical split form
//     f = p^p_exp * c * T^w * (1 + N) * (1 + P)
// where c is a unit of R, N is a finite Laurent polynomial in T^{-1} with
// coefficients in the maximal ideal (exact, since they are nilpotent), and
// 1 + P is a power series known modulo T^{pos_hi + 1}. Products and
// inverses act on each factor separately, so no window is lost beyond the
// power-series truncation.

#include <climits>
#include <map>
#include <vector>

#include "katores/ring.hpp"

namespace katores {

constexpr long kUnbounded = LONG_MAX / 4;
/// pos_hi of a power-series part that is known exactly (a finite polynomial).
constexpr long kExactWindow = LONG_MAX / 8;

/// Raw windowed Laurent series: sum of c[k] T^(lo+k) for lo+k <= hi, plus
/// O(T^(hi+1)). Exactly zero below lo. hi == kUnbounded means exact.
struct Series {
  Ring ring;
  long lo = 0;
  long hi = kUnbounded;
  std::vector<GRElem> c;

  GRElem at(long e) const;
  /// Drop zero coefficients at the bottom and anything stored above hi.
  void normalize();
};

Series series_mul(const Series& a, const Series& b);
Series series_add(const Series& a, const Series& b);
Series series_scale(const Series& a, const GRElem& s);

struct LaurentUnit {
  Ring ring;
  long p_exp = 0;
  GRElem c;                  // unit
  long w = 0;                // winding number
  std::vector<GRElem> neg;   // neg[k] = coefficient of T^{-k} in 1 + N; neg[0] = 1
  std::vector<GRElem> pos;   // pos[k] = coefficient of T^k in 1 + P; pos[0] = 1
  long pos_hi = 0;           // 1 + P is known modulo T^(pos_hi + 1)

  int neg_degree() const { return static_cast<int>(neg.size()) - 1; }
  /// Guaranteed window of the raw coefficients.
  long lo() const { return w - neg_degree(); }
  long hi() const { return w + pos_hi - neg_degree(); }
  /// Raw coefficients of the unit part (without the p^p_exp prefactor).
  Series coefficients() const;
};

/// Canonical split of p^p_exp * h. pos_cap bounds the power-series part and
/// is required when h is exact. Throws NotAUnit if no coefficient of h in its
/// window is a unit, WindowUnderflow if the window is too short to split.
LaurentUnit lau_split(const Series& h, long p_exp, long pos_cap = kUnbounded);

/// Builds the unit p^p_exp * sum coeffs[e] T^e known on the window [lo, hi].
LaurentUnit lau_make(const Ring& ring, long p_exp, const std::map<long, GRElem>& coeffs, long lo, long hi);

LaurentUnit lau_constant(const GRElem& c, long p_exp = 0, long pos_hi = kExactWindow);
LaurentUnit lau_monomial(const Ring& ring, long w, long pos_hi = kExactWindow);

LaurentUnit lau_mul(const LaurentUnit& f, const LaurentUnit& g);
LaurentUnit lau_inv(const LaurentUnit& f);
LaurentUnit lau_div(const LaurentUnit& f, const LaurentUnit& g);
LaurentUnit lau_pow(const LaurentUnit& f, long e);
/// Same element with the power-series part cut to pos_hi.
LaurentUnit lau_truncate(const LaurentUnit& f, long pos_hi);

enum class LauOp { Mul, Div };
LaurentUnit lau_arith(const LaurentUnit& f, const LaurentUnit& g, LauOp op);

long winding_number(const LaurentUnit& f);

/// Equality at the common precision of the two arguments.
bool lau_equal(const LaurentUnit& f, const LaurentUnit& g);

struct WittParam {
  long i;
  GRElem value;
};

struct WittData {
  long w = 0;
  GRElem f0;
  std::vector<WittParam> pos;  // f_i for i >= 1, nonzero only
  std::vector<WittParam> neg;  // f_{-i} for i >= 1, nonzero only, all in m
  long p_exp = 0;
  long pos_hi = 0;             // positive parameters are exact for i <= pos_hi
};

/// f = p^p_exp f0 T^w prod (1 - f_{-i} T^{-i}) prod (1 - f_i T^i).
WittData witt_decompose(const LaurentUnit& f);
LaurentUnit witt_recompose(const WittData& data, const Ring& ring);

/// f(t) for a parameter t with winding number 1 and no p-prefactor.
LaurentUnit reparametrize(const LaurentUnit& f, const LaurentUnit& t);

}  // namespace katores
