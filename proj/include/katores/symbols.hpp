#pragma once

// Symbols of pairs of units: Contou-Carrere, Kato's residue symbol, the
// classical tame symbol and the specialization map.

#include <string>
#include <utility>

#include "katores/laurent.hpp"
#include "katores/ring.hpp"

namespace katores {

/// p^p_val * unit, certified modulo p^prec.
struct SymbolValue {
  long p_val = 0;
  GRElem unit;
  int prec = 0;

  static SymbolValue one(const Ring& r);
  std::string to_string() const;
};

SymbolValue operator*(const SymbolValue& a, const SymbolValue& b);
SymbolValue sv_inverse(const SymbolValue& a);
SymbolValue sv_pow(const SymbolValue& a, long e);
/// p_val == 0 and unit == 1 modulo p^prec.
bool sv_is_one(const SymbolValue& a);
/// Same p_val and units congruent modulo p^min(prec).
bool sv_equal(const SymbolValue& a, const SymbolValue& b);
/// Congruent modulo p^n (ignores the stored precision).
bool unit_congruent(const GRElem& a, const GRElem& b, int n);

SymbolValue contou_carrere(const LaurentUnit& f, const LaurentUnit& g);
SymbolValue kato_symbol(const LaurentUnit& f, const LaurentUnit& g);
/// (-1)^{ab} f^b / g^a read off in the residue field, a = w(f), b = w(g).
GRElem tame_boundary(const LaurentUnit& f, const LaurentUnit& g);
/// Residue classes of the leading units of f and g; the p-prefactor plays the
/// role of the uniformizer and is ignored.
std::pair<GRElem, GRElem> specialize(const LaurentUnit& f, const LaurentUnit& g);

}  // namespace katores
