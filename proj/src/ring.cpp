#include "katores/ring.hpp"

#include <algorithm>
#include <sstream>

#include "katores/error.hpp"
#include "katores/fp_poly.hpp"
#include "katores/integer.hpp"

namespace katores {

using fp::addmod;
using fp::mulmod;
using fp::submod;

std::vector<u64> RingDesc::modulus() const {
  std::vector<u64> m(h.begin(), h.begin() + d);
  m.push_back(1);
  return m;
}

namespace {

std::shared_ptr<RingDesc> raw_ring(u64 p, int N, int d, const Coords& h) {
  auto desc = std::make_shared<RingDesc>();
  desc->p = p;
  desc->N = N;
  desc->d = d;
  desc->q = checked_prime_power(p, N);
  for (int i = 0; i < d; ++i) desc->h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] % desc->q;
  return desc;
}

// Frobenius image of x: the root of H congruent to x^p, found by Newton steps.
void install_frobenius(const std::shared_ptr<RingDesc>& desc) {
  const Ring r = desc;
  if (desc->d == 1) return;
  const GRElem x = GRElem::gen(r);
  GRElem y = x.pow(static_cast<long long>(desc->p));
  const std::vector<u64> H = desc->modulus();
  for (int iter = 0; iter < 128; ++iter) {
    GRElem value(r), deriv(r);
    for (std::size_t i = H.size(); i-- > 0;) {
      deriv = deriv * y + value;
      value = value * y + GRElem(r, std::vector<u64>{H[i]});
    }
    if (value.is_zero()) {
      desc->frob_x = y.coords();
      return;
    }
    y -= value * deriv.inverse();
  }
  throw Error(ErrorCode::InvalidRing, "Frobenius lift did not converge");
}

}  // namespace

Ring make_ring(u64 p, int N, int d, const std::vector<u64>& H) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidRing, std::to_string(p) + " is not prime");
  if (N < 1) throw Error(ErrorCode::InvalidRing, "precision N must be at least 1");
  if (d < 1 || d > kMaxDegree) throw Error(ErrorCode::InvalidRing, "residue degree must lie in [1, 8]");
  std::vector<u64> mod = H;
  if (mod.empty() && d == 1) mod = {0, 1};
  if (static_cast<int>(mod.size()) == d) mod.push_back(1);
  if (static_cast<int>(mod.size()) != d + 1 || mod.back() != 1)
    throw Error(ErrorCode::InvalidRing, "modulus must be monic of degree d");
  if (d == 1 && mod[0] != 0) throw Error(ErrorCode::InvalidRing, "for d = 1 the modulus must be x");
  const u64 q = checked_prime_power(p, N);
  fp::Poly red(mod.size());
  for (std::size_t i = 0; i < mod.size(); ++i) red[i] = (mod[i] % q) % p;
  if (!fp::is_irreducible(red, p)) throw Error(ErrorCode::InvalidRing, "modulus is reducible mod p");
  Coords h{};
  for (int i = 0; i < d; ++i) h[static_cast<std::size_t>(i)] = mod[static_cast<std::size_t>(i)];
  auto desc = raw_ring(p, N, d, h);
  install_frobenius(desc);
  return desc;
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->p == b->p && a->N == b->N && a->d == b->d && a->h == b->h;
}

Ring base_ring(const Ring& r) {
  if (r->d == 1) return r;
  return raw_ring(r->p, r->N, 1, Coords{});
}

Ring with_precision(const Ring& r, int M) {
  if (M == r->N) return r;
  if (M < 1) throw Error(ErrorCode::InvalidRing, "precision must be at least 1");
  auto desc = raw_ring(r->p, M, r->d, r->h);
  install_frobenius(desc);
  return desc;
}

Ring residue_ring(const Ring& r) { return with_precision(r, 1); }

namespace {

void require_same(const GRElem& a, const GRElem& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorCode::MixedRings, "operands live in different rings");
}

int coord_valuation(u64 c, u64 p) {
  int v = 0;
  while (c % p == 0) {
    c /= p;
    ++v;
  }
  return v;
}

}  // namespace

GRElem::GRElem(Ring ring, long long value) : ring_(std::move(ring)) {
  const u64 q = ring_->q;
  const long long m = static_cast<long long>(q);
  long long v = value % m;
  if (v < 0) v += m;
  c_[0] = static_cast<u64>(v);
}

GRElem::GRElem(Ring ring, const mpz_class& value) : ring_(std::move(ring)) {
  mpz_class m = ring_->q;
  mpz_class v = value % m;
  if (v < 0) v += m;
  c_[0] = v.get_ui();
}

GRElem::GRElem(Ring ring, const std::vector<u64>& coords) : ring_(std::move(ring)) {
  if (static_cast<int>(coords.size()) > ring_->d) throw Error(ErrorCode::BadParameter, "too many coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = coords[i] % ring_->q;
}

GRElem GRElem::gen(const Ring& r) {
  if (r->d == 1) return GRElem(r);
  return GRElem(r, std::vector<u64>{0, 1});
}

bool GRElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 c) { return c == 0; });
}

bool GRElem::is_one() const {
  if (c_[0] != 1 % ring_->q) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](u64 c) { return c == 0; });
}

bool GRElem::is_unit() const {
  for (int i = 0; i < ring_->d; ++i)
    if (c_[static_cast<std::size_t>(i)] % ring_->p != 0) return true;
  return false;
}

int GRElem::valuation() const {
  int v = ring_->N;
  for (int i = 0; i < ring_->d; ++i) {
    const u64 c = c_[static_cast<std::size_t>(i)];
    if (c != 0) v = std::min(v, coord_valuation(c, ring_->p));
  }
  return v;
}

GRElem GRElem::operator-() const {
  GRElem r(ring_);
  for (int i = 0; i < ring_->d; ++i) r.c_[static_cast<std::size_t>(i)] = submod(0, c_[static_cast<std::size_t>(i)], ring_->q);
  return r;
}

GRElem& GRElem::operator+=(const GRElem& o) {
  require_same(*this, o);
  for (int i = 0; i < ring_->d; ++i) {
    auto k = static_cast<std::size_t>(i);
    c_[k] = addmod(c_[k], o.c_[k], ring_->q);
  }
  return *this;
}

GRElem& GRElem::operator-=(const GRElem& o) {
  require_same(*this, o);
  for (int i = 0; i < ring_->d; ++i) {
    auto k = static_cast<std::size_t>(i);
    c_[k] = submod(c_[k], o.c_[k], ring_->q);
  }
  return *this;
}

GRElem& GRElem::operator*=(const GRElem& o) {
  require_same(*this, o);
  const int d = ring_->d;
  const u64 q = ring_->q;
  if (d == 1) {
    c_[0] = mulmod(c_[0], o.c_[0], q);
    return *this;
  }
  std::array<u64, 2 * kMaxDegree> prod{};
  for (int i = 0; i < d; ++i) {
    const u64 a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < d; ++j) {
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = addmod(slot, mulmod(a, o.c_[static_cast<std::size_t>(j)], q), q);
    }
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    const u64 c = prod[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int i = 0; i < d; ++i) {
      auto& slot = prod[static_cast<std::size_t>(k - d + i)];
      slot = submod(slot, mulmod(c, ring_->h[static_cast<std::size_t>(i)], q), q);
    }
  }
  for (int i = 0; i < d; ++i) c_[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
  return *this;
}

bool operator==(const GRElem& a, const GRElem& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  return a.c_ == b.c_;
}

GRElem GRElem::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::NonUnitDivisor, "element " + to_string() + " is not a unit");
  const u64 p = ring_->p;
  if (ring_->d == 1) {
    GRElem r(ring_);
    r.c_[0] = fp::invmod(c_[0], ring_->q);
    return r;
  }
  fp::Poly a = residue();
  fp::trim(a);
  fp::Poly h = ring_->modulus();
  for (auto& c : h) c %= p;
  const fp::ExtGcd eg = fp::ext_gcd(a, h, p);
  GRElem y(ring_, std::vector<u64>(eg.s.begin(), eg.s.end()));
  const GRElem two(ring_, 2LL);
  for (int iter = 0; iter < 64; ++iter) {
    const GRElem ay = *this * y;
    if (ay.is_one()) return y;
    y = y * (two - ay);
  }
  throw Error(ErrorCode::NonUnitDivisor, "inverse lift did not converge");
}

GRElem GRElem::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  GRElem result = one(ring_);
  GRElem base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

GRElem GRElem::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  GRElem result = one(ring_);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

GRElem GRElem::cast(const Ring& target) const {
  if (target->p != ring_->p || target->d != ring_->d)
    throw Error(ErrorCode::MixedRings, "cast between rings with different p or d");
  GRElem r(target);
  for (int i = 0; i < ring_->d; ++i) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] % target->q;
  return r;
}

std::vector<u64> GRElem::residue() const {
  std::vector<u64> r(static_cast<std::size_t>(ring_->d));
  for (int i = 0; i < ring_->d; ++i) r[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] % ring_->p;
  return r;
}

std::string GRElem::to_string() const {
  if (ring_->d == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < ring_->d; ++i) os << (i ? "," : "") << c_[static_cast<std::size_t>(i)];
  os << ']';
  return os.str();
}

GRElem div(const GRElem& a, const GRElem& b) {
  require_same(a, b);
  return a * b.inverse();
}

GRElem gr_arith(const GRElem& a, const GRElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return div(a, b);
  }
  throw Error(ErrorCode::BadParameter, "unknown operation");
}

int gr_valuation(const GRElem& a) { return a.valuation(); }

GRElem frobenius(const GRElem& a) {
  const Ring& r = a.ring();
  if (r->d == 1) return a;
  const GRElem sx(r, std::vector<u64>(r->frob_x.begin(), r->frob_x.begin() + r->d));
  GRElem result(r);
  GRElem power = GRElem::one(r);
  for (int i = 0; i < r->d; ++i) {
    result += power * GRElem(r, std::vector<u64>{a.coeff(i)});
    power *= sx;
  }
  return result;
}

GRElem norm(const GRElem& a) {
  const Ring& r = a.ring();
  GRElem prod = a;
  GRElem conj = a;
  for (int i = 1; i < r->d; ++i) {
    conj = frobenius(conj);
    prod *= conj;
  }
  for (int i = 1; i < r->d; ++i)
    if (prod.coeff(i) != 0) throw Error(ErrorCode::InvalidRing, "norm left the base ring");
  return GRElem(base_ring(r), std::vector<u64>{prod.coeff(0)});
}

FrobeniusNorm gr_frobenius_norm(const GRElem& a) { return {frobenius(a), norm(a)}; }

}  // namespace katores
