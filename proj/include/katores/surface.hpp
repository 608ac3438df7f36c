#pragma once

// Local symbols on desk-scale arithmetic surfaces (Spec Z_p[[T]] and P^1
// over Z_p) and the reciprocity audits built from them, plus Weil
// reciprocity on P^1 over F_q and over Q.

#include <optional>
#include <string>
#include <vector>

#include "katores/factored.hpp"
#include "katores/symbols.hpp"

namespace katores {

/// A curve on the surface: the special fiber, or the closure of a
/// horizontal point given by a monic integer polynomial irreducible over Q_p.
struct Curve {
  enum class Kind { Vertical, Horizontal };
  Kind kind = Kind::Vertical;
  IntPoly pi;

  static Curve vertical() { return {Kind::Vertical, {}}; }
  static Curve horizontal(const IntPoly& pi) { return {Kind::Horizontal, pi}; }
};

/// Starting power-series window for expansions; local_symbol doubles it
/// until the symbol is certified to full precision.
constexpr long kDefaultWindow = 24;
constexpr long kMaxWindow = 4096;

/// Two-dimensional local symbol at the incident pair (x, y), valued in
/// Q_p^x and reported modulo p^N. Throws NotIncident, PrecisionExhausted.
SymbolValue local_symbol(const FactoredFunction& f, const FactoredFunction& g, const ClosedPoint& x, const Curve& y,
                         u64 p, int N, long window = kDefaultWindow);

/// Kato symbol of the expansions of f, g in Q_p{{T}} (the prime (p) of Z_p[[T]]).
SymbolValue symbol_at_p(const FactoredFunction& f, const FactoredFunction& g, u64 p, int N, long window = kDefaultWindow);

struct AuditEntry {
  std::string place;
  std::optional<SymbolValue> value;  // p-adic audits and F_q
  std::optional<mpq_class> exact;    // exact rational symbols (global over Q, point audit primes)
};

/// |x|_v for every place v of Q met by the entries, per entry.
struct AbsValueRow {
  std::string place;                // "inf" or a prime
  std::vector<mpq_class> values;    // one per audit entry
  mpq_class product;                // |prod of entries|_v
};

struct AuditReport {
  std::string audit;  // point | vertical | global
  std::string base;   // Z_p, Q or F_q
  u64 p = 0;
  int N = 0;
  int target = 0;
  std::vector<AuditEntry> entries;
  std::optional<SymbolValue> product;
  std::optional<mpq_class> exact_product;
  std::vector<AbsValueRow> abs_table;
  int certified_prec = 0;
  bool pass = false;
};

/// Recomputes product, certified precision and pass from the entries.
void refold(AuditReport& report);

/// Reciprocity around the closed point of Spec Z_p[[T]]: the prime (p) and
/// every distinguished prime in the supports.
AuditReport verify_point_reciprocity(const FactoredFunction& f, const FactoredFunction& g, u64 p, int N,
                                     long window = kDefaultWindow);

/// Reciprocity along the special fiber of P^1 over Z_p. Requires every atom
/// to be nonzero mod p and constants to be p-adic units (BadReduction).
/// n = 0 means n = N.
AuditReport verify_vertical_reciprocity(const FactoredFunction& f, const FactoredFunction& g, u64 p, int N, int n = 0,
                                        long window = kDefaultWindow);

/// Fiber points where f or g reduces to a zero or pole, plus infinity when
/// either has a nonconstant atom. Canonically ordered.
std::vector<ClosedPoint> vertical_support(const FactoredFunction& f, const FactoredFunction& g, u64 p);

/// Weil reciprocity on P^1 over F_q (q prime): exact in F_q^x.
AuditReport verify_global_weil_fq(const FactoredFunction& f, const FactoredFunction& g, u64 q);
/// Weil reciprocity on P^1 over Q: exact in Q^x, with the absolute-value table.
/// Polynomial atoms must be irreducible over Q (checked up to degree 3).
AuditReport verify_global_weil_q(const FactoredFunction& f, const FactoredFunction& g);

}  // namespace katores
