#include "katores/integer.hpp"

#include <random>
#include <set>

#include "katores/error.hpp"

namespace katores {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int valuation(const mpz_class& x, std::uint64_t p) {
  if (x == 0) throw Error(ErrorCode::BadParameter, "valuation of zero");
  mpz_class t = x;
  int v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const mpq_class& x, std::uint64_t p) {
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

mpq_class rational_pow(const mpq_class& base, long e) {
  mpq_class r = 1;
  mpq_class b = base;
  if (e < 0) {
    if (b == 0) throw Error(ErrorCode::BadParameter, "negative power of zero");
    b = 1 / b;
    e = -e;
  }
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t unit_residue(const mpq_class& unit, std::uint64_t modulus) {
  mpz_class m = modulus;
  mpz_class num = unit.get_num() % m;
  if (num < 0) num += m;
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), unit.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorCode::NonUnitDivisor, "denominator not invertible mod " + m.get_str());
  mpz_class r = (num * den_inv) % m;
  return r.get_ui();
}

std::uint64_t checked_prime_power(std::uint64_t p, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > (std::uint64_t{1} << 62) / p) throw Error(ErrorCode::InvalidRing, "p^N exceeds 2^62");
    r *= p;
  }
  return r;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::mt19937_64 rng(0x5eedULL);
  for (int attempt = 0; attempt < 64; ++attempt) {
    mpz_class c = static_cast<unsigned long>(rng() % 1000 + 1);
    mpz_class x = static_cast<unsigned long>(rng() % 1000 + 2);
    mpz_class y = x;
    mpz_class d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
  throw Error(ErrorCode::BadParameter, "could not factor " + n.get_str());
}

void factor_into(mpz_class n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.push_back(n);
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0) throw Error(ErrorCode::BadParameter, "factor of zero");
  std::vector<mpz_class> primes;
  for (unsigned long d = 2; d < 100000 && mpz_class(d) * d <= n; ++d) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      primes.emplace_back(d);
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<mpz_class, int>> result;
  for (const auto& q : primes) {
    if (!result.empty() && result.back().first == q)
      ++result.back().second;
    else
      result.emplace_back(q, 1);
  }
  return result;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) throw Error(ErrorCode::Parse, "bad rational '" + text + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const mpq_class& q) { return q.get_str(10); }

namespace {

template <class T>
T resultant_generic(const std::vector<T>& a, const std::vector<T>& b) {
  const int n = poly::degree(a);
  if (n < 0) throw Error(ErrorCode::BadParameter, "resultant with zero polynomial");
  if (a.back() != 1) throw Error(ErrorCode::BadParameter, "resultant expects a monic first argument");
  if (n == 0) return T(1);
  std::vector<std::vector<T>> m(static_cast<std::size_t>(n), std::vector<T>(static_cast<std::size_t>(n), T(0)));
  std::vector<T> row = poly::rem_monic(b, a);
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) m[j][static_cast<std::size_t>(i)] = row[j];
    std::vector<T> shifted(row.size() + 1, T(0));
    for (std::size_t j = 0; j < row.size(); ++j) shifted[j + 1] = row[j];
    row = poly::rem_monic(shifted, a);
  }
  return determinant<T>(m, T(0), T(1));
}

}  // namespace

mpz_class resultant(const IntPoly& monic_a, const IntPoly& b) { return resultant_generic(monic_a, b); }

mpq_class resultant(const RatPoly& monic_a, const RatPoly& b) { return resultant_generic(monic_a, b); }

IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  poly::trim(d);
  return d;
}

mpz_class discriminant_monic(const IntPoly& monic) {
  const long n = poly::degree(monic);
  mpz_class r = resultant(monic, derivative(monic));
  return ((n * (n - 1) / 2) % 2 == 0) ? r : mpz_class(-r);
}

bool has_root_in_Zp(const IntPoly& monic, std::uint64_t p) {
  const IntPoly deriv = derivative(monic);
  const mpz_class disc = discriminant_monic(monic);
  if (disc == 0) throw Error(ErrorCode::BadParameter, "root search needs a squarefree polynomial");
  const int depth_cap = 2 * valuation(disc, p) + 4;

  // Candidates r mod p^k with f(r) = 0 mod p^k, refined until Hensel applies.
  std::vector<mpz_class> level;
  for (std::uint64_t r = 0; r < p; ++r)
    if (mpz_divisible_ui_p(mpz_class(poly::eval(monic, mpz_class(r))).get_mpz_t(), p)) level.emplace_back(r);
  mpz_class pk = p;
  for (int k = 1; !level.empty(); ++k) {
    if (k > depth_cap + 1) throw Error(ErrorCode::PrecisionExhausted, "p-adic root search did not settle");
    std::vector<mpz_class> next;
    for (const auto& r : level) {
      const mpz_class fr = poly::eval(monic, r);
      if (fr == 0) return true;
      const mpz_class dr = poly::eval(deriv, r);
      if (dr != 0 && valuation(fr, p) > 2 * valuation(dr, p)) return true;
      for (std::uint64_t t = 0; t < p; ++t) {
        const mpz_class cand = r + pk * t;
        const mpz_class v = poly::eval(monic, cand);
        mpz_class pk1 = pk * p;
        if (mpz_divisible_p(v.get_mpz_t(), pk1.get_mpz_t())) next.push_back(cand);
      }
    }
    level = std::move(next);
    pk *= p;
  }
  return false;
}

std::optional<bool> irreducible_over_Qp(const IntPoly& monic, std::uint64_t p) {
  const int n = poly::degree(monic);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (n > 3) return std::nullopt;
  if (discriminant_monic(monic) == 0) return false;
  return !has_root_in_Zp(monic, p);
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> ds;
  for (const auto& [q, e] : factor_integer(n)) {
    const std::size_t before = ds.empty() ? 1 : ds.size();
    if (ds.empty()) ds.emplace_back(1);
    std::vector<mpz_class> extra;
    for (std::size_t i = 0; i < before; ++i) {
      mpz_class m = ds[i];
      for (int k = 0; k < e; ++k) {
        m *= q;
        extra.push_back(m);
      }
    }
    ds.insert(ds.end(), extra.begin(), extra.end());
  }
  if (ds.empty()) ds.emplace_back(1);
  return ds;
}

}  // namespace

std::optional<bool> irreducible_over_Q(const IntPoly& f) {
  const int n = poly::degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (n > 3) return std::nullopt;
  if (f[0] == 0) return false;
  for (const auto& a : divisors(f[0]))
    for (const auto& b : divisors(f.back()))
      for (int sign : {1, -1}) {
        const mpq_class r(a * sign, b);
        mpq_class value = 0;
        for (std::size_t i = f.size(); i-- > 0;) value = value * r + mpq_class(f[i]);
        if (value == 0) return false;
      }
  return true;
}

}  // namespace katores
