#include "katores/fp_poly.hpp"

#include <algorithm>

#include "katores/error.hpp"

namespace katores::fp {

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  mpz_class x = a, mod = m, r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw Error(ErrorCode::NonUnitDivisor, std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return r.get_ui();
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const IntPoly& f, u64 p) {
  Poly r(f.size());
  const mpz_class mp = p;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_class c = f[i] % mp;
    if (c < 0) c += mp;
    r[i] = c.get_ui();
  }
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = addmod(r[i], b[i], p);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = submod(r[i], b[i], p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 c, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
  trim(r);
  return r;
}

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, invmod(a.back(), p), p);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) throw Error(ErrorCode::NonUnitDivisor, "division by the zero polynomial");
  Poly r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) return {Poly{}, r};
  Poly q(static_cast<std::size_t>(degree(r) - db + 1), 0);
  const u64 lead_inv = invmod(b.back(), p);
  for (int k = degree(r); k >= db; --k) {
    const u64 c = mulmod(r[static_cast<std::size_t>(k)], lead_inv, p);
    q[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) {
      auto& slot = r[static_cast<std::size_t>(k - db + i)];
      slot = submod(slot, mulmod(c, b[static_cast<std::size_t>(i)], p), p);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b, u64 p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s = sub(s0, mul(q, s1, p), p);
    Poly t = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.empty()) return {r0, s0, t0};
  const u64 inv = invmod(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, u64 p) {
  Poly result = rem(Poly{1}, m, p);
  Poly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> r;
  for (int q = 2; q <= n; ++q) {
    if (n % q) continue;
    r.push_back(q);
    while (n % q == 0) n /= q;
  }
  return r;
}

}  // namespace

bool is_irreducible(const Poly& f_in, u64 p) {
  Poly f = monic(f_in, p);
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  mpz_class pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, static_cast<unsigned long>(n));
  if (powmod(x, pn, f, p) != x) return false;
  for (int q : prime_divisors(n)) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(n / q));
    if (degree(gcd(sub(powmod(x, pk, f, p), x, p), f, p)) != 0) return false;
  }
  return true;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::vector<Poly> monic_irreducibles(u64 p, int d) {
  std::vector<Poly> out;
  if (d < 1) return out;
  Poly f(static_cast<std::size_t>(d + 1), 0);
  f.back() = 1;
  // Odometer over the d lower coefficients, most significant digit at index d-1.
  while (true) {
    if (is_irreducible(f, p)) out.push_back(f);
    int i = 0;
    while (i < d && ++f[static_cast<std::size_t>(i)] == p) f[static_cast<std::size_t>(i++)] = 0;
    if (i == d) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Factorization factor(const Poly& f_in, u64 p) {
  Poly f = f_in;
  trim(f);
  if (f.empty()) throw Error(ErrorCode::BadParameter, "factor of the zero polynomial");
  Factorization out;
  out.lead = f.back();
  f = monic(f, p);
  for (int d = 1; 2 * d <= degree(f); ++d) {
    for (const Poly& cand : monic_irreducibles(p, d)) {
      int mult = 0;
      while (degree(f) >= d) {
        auto [q, r] = divmod(f, cand, p);
        if (!r.empty()) break;
        f = std::move(q);
        ++mult;
      }
      if (mult) out.factors.emplace_back(cand, mult);
    }
  }
  if (degree(f) >= 1) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const auto& e) { return e.first == f; });
    if (it != out.factors.end())
      ++it->second;
    else
      out.factors.emplace_back(f, 1);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

}  // namespace katores::fp
