#pragma once

// Exact integer and rational helpers on top of GMP: p-adic valuations,
// dense polynomials, division-free determinants and resultants, and the
// small irreducibility tests used to validate user-declared primes.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace katores {

/// Dense integer polynomial, ascending degree. The zero polynomial is empty.
using IntPoly = std::vector<mpz_class>;
/// Dense rational polynomial, ascending degree.
using RatPoly = std::vector<mpq_class>;

bool is_prime(std::uint64_t n);

/// p-adic valuation of a nonzero integer / rational.
int valuation(const mpz_class& x, std::uint64_t p);
int valuation(const mpq_class& x, std::uint64_t p);

/// p^e as an exact rational; e may be negative.
mpq_class rational_pow(const mpq_class& base, long e);

/// Image of a p-adic unit rational in Z/p^N, least nonnegative residue.
std::uint64_t unit_residue(const mpq_class& unit, std::uint64_t modulus);

std::uint64_t checked_prime_power(std::uint64_t p, int n);

/// Integer factorization by trial division with a Pollard rho fallback.
std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n);

mpq_class parse_rational(const std::string& text);
std::string to_string(const mpq_class& q);

namespace poly {

template <class T>
void trim(std::vector<T>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

template <class T>
int degree(const std::vector<T>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> r(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

template <class T>
std::vector<T> scale(const std::vector<T>& a, const T& c) {
  std::vector<T> r(a);
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

template <class T>
std::vector<T> pow(const std::vector<T>& a, unsigned e) {
  std::vector<T> r{T(1)};
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

template <class T>
T eval(const std::vector<T>& a, const T& x) {
  T r(0);
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

/// Remainder of b modulo a monic polynomial a. Works over any ring.
template <class T>
std::vector<T> rem_monic(std::vector<T> b, const std::vector<T>& a) {
  const int n = degree(a);
  for (int k = degree(b); k >= n; --k) {
    const T c = b[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int i = 0; i <= n; ++i) b[static_cast<std::size_t>(k - n + i)] -= c * a[static_cast<std::size_t>(i)];
  }
  if (static_cast<int>(b.size()) > n) b.resize(static_cast<std::size_t>(std::max(n, 0)));
  trim(b);
  return b;
}

}  // namespace poly

/// Division-free determinant (Bird's algorithm); valid over any commutative
/// ring, so it serves integers, rationals and truncated p-adic rings alike.
template <class T>
T determinant(const std::vector<std::vector<T>>& a, const T& zero, const T& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  std::vector<std::vector<T>> x = a;
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<std::vector<T>> mu(n, std::vector<T>(n, zero));
    T acc = zero;
    for (std::size_t i = n; i-- > 0;) {
      mu[i][i] = zero - acc;
      acc = acc + x[i][i];
      for (std::size_t j = i + 1; j < n; ++j) mu[i][j] = x[i][j];
    }
    std::vector<std::vector<T>> next(n, std::vector<T>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i; k < n; ++k) {
        if (mu[i][k] == zero) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] + mu[i][k] * a[k][j];
      }
    x = std::move(next);
  }
  return (n % 2 == 1) ? x[0][0] : zero - x[0][0];
}

/// Res(A, B) = prod_{A(alpha)=0} B(alpha) for monic A, computed as the
/// determinant of multiplication by B on R[x]/(A).
mpz_class resultant(const IntPoly& monic_a, const IntPoly& b);
mpq_class resultant(const RatPoly& monic_a, const RatPoly& b);

/// Does the monic integer polynomial have a root in Z_p? Exact for squarefree input.
bool has_root_in_Zp(const IntPoly& monic, std::uint64_t p);

/// Irreducibility over Q_p for degree <= 3; nullopt above (caller asserts).
std::optional<bool> irreducible_over_Qp(const IntPoly& monic, std::uint64_t p);

/// Irreducibility over Q for degree <= 3 via the rational root test; nullopt above.
std::optional<bool> irreducible_over_Q(const IntPoly& f);

IntPoly derivative(const IntPoly& f);
mpz_class discriminant_monic(const IntPoly& monic);

}  // namespace katores
