#pragma once

// Text front end: the expression grammar for Laurent polynomials, the audit
// input file, and canonical JSON / table renderings of every result type.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "katores/factored.hpp"
#include "katores/laurent.hpp"
#include "katores/surface.hpp"
#include "katores/symbols.hpp"
#include "katores/weierstrass.hpp"

namespace katores {

/// Finite Laurent polynomial with rational coefficients, exponent -> coefficient.
using LaurentPoly = std::map<long, mpq_class>;

/// Grammar: integer literals, T (or t), + - * / ^, parentheses. Division is
/// by nonzero constants only; negative exponents only on single terms.
/// Throws Parse.
LaurentPoly parse_expression(const std::string& text);

/// p^v * (unit series) over ring, known on [lo, hi]; lo defaults to the
/// lowest exponent present. Throws BadParameter for zero or lo too high.
LaurentUnit to_laurent_unit(const LaurentPoly& f, const Ring& ring, std::optional<long> lo, long hi);

/// Integer polynomial (nonnegative exponents, integral coefficients).
IntPoly to_int_poly(const LaurentPoly& f);

struct AuditInput {
  std::string audit;      // point | vertical | global
  std::string base = "Q";  // global audits: Q or Fq (q = p)
  u64 p = 0;
  int N = 1;
  int n = 0;
  long window = kDefaultWindow;
  FactoredFunction f, g;
  std::vector<std::string> omit_places;  // negative controls: places left out of the fold
};

/// Parses the JSON audit description. Throws Parse.
AuditInput parse_audit_input(const std::string& json_text);
FactoredFunction parse_atoms_json(const std::string& json_text);

AuditReport run_audit(const AuditInput& input);

enum class Format { Json, Table };

std::string render(const SymbolValue& v, Format format);
std::string render(const WittData& w, Format format);
std::string render(const PreparedForm& pf, Format format);
std::string render(const AuditReport& r, Format format);

}  // namespace katores
