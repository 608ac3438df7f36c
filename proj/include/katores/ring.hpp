#pragma once

// Galois rings GR(p^N, d) = (Z/p^N)[x]/(H). Elements are stored as d
// coordinates in the power basis of H, each the least nonnegative residue.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace katores {

using u64 = std::uint64_t;

constexpr int kMaxDegree = 8;
using Coords = std::array<u64, kMaxDegree>;

struct RingDesc {
  u64 p = 0;
  int N = 0;
  int d = 0;
  u64 q = 0;   // p^N
  Coords h{};  // H = x^d + h[d-1] x^{d-1} + ... + h[0]
  Coords frob_x{};  // image of x under Frobenius

  /// H as a dense ascending coefficient list of length d + 1.
  std::vector<u64> modulus() const;
};

using Ring = std::shared_ptr<const RingDesc>;

/// Validates p prime, N >= 1, 1 <= d <= 8, p^N < 2^62 and H mod p irreducible.
/// H is given ascending, either of length d (monic term implied) or d + 1.
/// For d = 1 the modulus must be x.
Ring make_ring(u64 p, int N, int d = 1, const std::vector<u64>& H = {});

bool same_ring(const Ring& a, const Ring& b);
/// Z/p^N with the same p, N.
Ring base_ring(const Ring& r);
/// GR(p, 1, d): the residue field F_{p^d}.
Ring residue_ring(const Ring& r);
/// GR(p^M, d) with the same modulus (coefficients reduced mod p^M).
Ring with_precision(const Ring& r, int M);

class GRElem {
 public:
  GRElem() = default;
  explicit GRElem(Ring ring) : ring_(std::move(ring)) {}
  GRElem(Ring ring, long long value);
  GRElem(Ring ring, const mpz_class& value);
  GRElem(Ring ring, const std::vector<u64>& coords);

  static GRElem zero(const Ring& r) { return GRElem(r); }
  static GRElem one(const Ring& r) { return GRElem(r, 1LL); }
  /// The generator x of the power basis.
  static GRElem gen(const Ring& r);

  const Ring& ring() const { return ring_; }
  u64 coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Coords& coords() const { return c_; }

  bool is_zero() const;
  bool is_unit() const;
  bool is_one() const;
  /// Largest v <= N with the element in p^v GR; N for zero.
  int valuation() const;

  GRElem operator-() const;
  GRElem& operator+=(const GRElem& o);
  GRElem& operator-=(const GRElem& o);
  GRElem& operator*=(const GRElem& o);
  friend GRElem operator+(GRElem a, const GRElem& b) { return a += b; }
  friend GRElem operator-(GRElem a, const GRElem& b) { return a -= b; }
  friend GRElem operator*(GRElem a, const GRElem& b) { return a *= b; }
  friend bool operator==(const GRElem& a, const GRElem& b);
  friend bool operator!=(const GRElem& a, const GRElem& b) { return !(a == b); }

  /// Multiplicative inverse; throws NonUnitDivisor.
  GRElem inverse() const;
  GRElem pow(long long e) const;
  GRElem pow(const mpz_class& e) const;
  /// Image in the ring with the same (p, d, H) and precision M <= N, or the
  /// coordinates reinterpreted in a ring of larger precision.
  GRElem cast(const Ring& target) const;

  /// Residue class modulo p as coordinates in [0, p).
  std::vector<u64> residue() const;
  std::string to_string() const;

 private:
  Ring ring_;
  Coords c_{};
};

GRElem div(const GRElem& a, const GRElem& b);

enum class ArithOp { Add, Sub, Mul, Div };
GRElem gr_arith(const GRElem& a, const GRElem& b, ArithOp op);
int gr_valuation(const GRElem& a);

struct FrobeniusNorm {
  GRElem frobenius;
  GRElem norm;  // lives in base_ring(a.ring())
};
FrobeniusNorm gr_frobenius_norm(const GRElem& a);
GRElem frobenius(const GRElem& a);
/// Norm to Z/p^N, returned in the base ring.
GRElem norm(const GRElem& a);

}  // namespace katores
