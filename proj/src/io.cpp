#include "katores/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "katores/error.hpp"

namespace katores {

using Json = nlohmann::ordered_json;

namespace {

// ---- expressions ----------------------------------------------------------

LaurentPoly lp_trim(LaurentPoly a) {
  for (auto it = a.begin(); it != a.end();) it = (it->second == 0) ? a.erase(it) : std::next(it);
  return a;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b, int sign) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b) r[e] += sign * c;
  return lp_trim(r);
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  return lp_trim(r);
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " at position " + std::to_string(i_) + " in '" + s_ + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    if (i_ - start > 9) fail("exponent too large");
    return std::stol(s_.substr(start, i_ - start));
  }

  LaurentPoly expr() {
    LaurentPoly r = term();
    while (true) {
      if (eat('+'))
        r = lp_add(r, term(), 1);
      else if (eat('-'))
        r = lp_add(r, term(), -1);
      else
        return r;
    }
  }

  LaurentPoly term() {
    LaurentPoly r = unary();
    while (true) {
      if (eat('*')) {
        r = lp_mul(r, unary());
      } else if (eat('/')) {
        const LaurentPoly d = unary();
        if (d.size() != 1 || d.begin()->first != 0) fail("division only by nonzero constants");
        r = lp_mul(r, LaurentPoly{{0, 1 / d.begin()->second}});
      } else {
        return r;
      }
    }
  }

  LaurentPoly unary() {
    if (eat('-')) return lp_mul(LaurentPoly{{0, -1}}, unary());
    if (eat('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!eat('^')) return base;
    const bool neg = eat('-');
    const long e = integer();
    if (!neg) {
      LaurentPoly r{{0, 1}};
      for (long k = 0; k < e; ++k) r = lp_mul(r, base);
      return r;
    }
    if (base.size() != 1) fail("negative exponents apply to single terms only");
    const auto [k, c] = *base.begin();
    return LaurentPoly{{-k * e, rational_pow(c, -e)}};
  }

  LaurentPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == 'T' || c == 't') {
      ++i_;
      return {{1, 1}};
    }
    if (c == '(') {
      ++i_;
      LaurentPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      const mpz_class v(s_.substr(start, i_ - start));
      return lp_trim({{0, mpq_class(v)}});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

// ---- audit input ------------------------------------------------------------

mpq_class json_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  throw Error(ErrorCode::Parse, "coefficients must be integers or rational strings");
}

AtomKind atom_kind(const std::string& s) {
  if (s == "constant") return AtomKind::Constant;
  if (s == "monomial") return AtomKind::Monomial;
  if (s == "distinguished") return AtomKind::Distinguished;
  if (s == "unitpoly") return AtomKind::UnitPoly;
  if (s == "poly") return AtomKind::Poly;
  throw Error(ErrorCode::Parse, "unknown atom kind '" + s + "'");
}

FactoredFunction atoms_from_json(const Json& list) {
  if (!list.is_array()) throw Error(ErrorCode::Parse, "a function is a list of atoms");
  FactoredFunction f;
  for (const auto& item : list) {
    if (!item.is_object() || !item.contains("kind")) throw Error(ErrorCode::Parse, "atom needs a kind");
    const AtomKind kind = atom_kind(item.at("kind").get<std::string>());
    const long exp = item.value("exp", 1L);
    if (kind == AtomKind::Monomial) {
      f = f * FactoredFunction::monomial(exp);
      continue;
    }
    if (!item.contains("coeffs") || !item.at("coeffs").is_array() || item.at("coeffs").empty())
      throw Error(ErrorCode::Parse, "atom needs a nonempty coeffs list");
    std::vector<mpq_class> c;
    for (const auto& x : item.at("coeffs")) c.push_back(json_rational(x));
    if (kind == AtomKind::Constant) {
      if (c.size() != 1) throw Error(ErrorCode::Parse, "constant atoms take one coefficient");
      f = f * FactoredFunction::constant(c[0], exp);
      continue;
    }
    // Clear denominators into a constant atom.
    mpz_class den = 1;
    for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    IntPoly poly;
    for (const auto& x : c) poly.push_back(mpz_class(x * den));
    f = f * FactoredFunction::polynomial(poly, exp, kind);
    if (den != 1) f = f * FactoredFunction::constant(mpq_class(1) / mpq_class(den), exp);
  }
  return f;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

// ---- rendering ---------------------------------------------------------------

// Little-endian decimal coordinates tagged with the ring (p, N, d, H).
Json gr_json(const GRElem& a) {
  const RingDesc& r = *a.ring();
  Json h = Json::array();
  for (const u64 c : r.modulus()) h.push_back(std::to_string(c));
  Json coords = Json::array();
  for (int i = 0; i < r.d; ++i) coords.push_back(std::to_string(a.coeff(i)));
  Json j;
  j["ring"] = {{"p", r.p}, {"N", r.N}, {"d", r.d}, {"H", h}};
  j["coords"] = coords;
  return j;
}

Json symbol_json(const SymbolValue& v) {
  Json j;
  j["p_val"] = v.p_val;
  j["unit"] = gr_json(v.unit);
  j["prec"] = v.prec;
  return j;
}

Json coeffs_json(const GRPoly& f) {
  Json j = Json::array();
  for (const auto& c : f) j.push_back(gr_json(c));
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

LaurentPoly parse_expression(const std::string& text) { return Parser(text).parse(); }

LaurentUnit to_laurent_unit(const LaurentPoly& f, const Ring& ring, std::optional<long> lo, long hi) {
  if (f.empty()) throw Error(ErrorCode::BadParameter, "zero is not a unit");
  int v = 0;
  bool first = true;
  for (const auto& [e, c] : f) {
    const int ve = valuation(c, ring->p);
    v = first ? ve : std::min(v, ve);
    first = false;
  }
  const long low = lo.value_or(f.begin()->first);
  if (low > f.begin()->first) throw Error(ErrorCode::BadParameter, "window starts above the lowest term");
  if (hi < f.rbegin()->first) throw Error(ErrorCode::BadParameter, "window ends below the highest term");
  const mpq_class pv = rational_pow(mpq_class(static_cast<unsigned long>(ring->p)), v);
  std::map<long, GRElem> coeffs;
  for (const auto& [e, c] : f) coeffs.emplace(e, GRElem(ring, static_cast<long long>(unit_residue(c / pv, ring->q))));
  return lau_make(ring, v, coeffs, low, hi);
}

IntPoly to_int_poly(const LaurentPoly& f) {
  IntPoly out;
  for (const auto& [e, c] : f) {
    if (e < 0) throw Error(ErrorCode::BadParameter, "negative powers of T in a polynomial");
    if (c.get_den() != 1) throw Error(ErrorCode::BadParameter, "polynomial coefficients must be integers");
    if (out.size() <= static_cast<std::size_t>(e)) out.resize(static_cast<std::size_t>(e) + 1);
    out[static_cast<std::size_t>(e)] = c.get_num();
  }
  return out;
}

FactoredFunction parse_atoms_json(const std::string& json_text) { return atoms_from_json(parse_json(json_text)); }

AuditInput parse_audit_input(const std::string& json_text) {
  const Json j = parse_json(json_text);
  if (!j.is_object()) throw Error(ErrorCode::Parse, "audit input must be a JSON object");
  AuditInput in;
  try {
    in.audit = j.at("audit").get<std::string>();
    if (in.audit != "point" && in.audit != "vertical" && in.audit != "global")
      throw Error(ErrorCode::Parse, "audit must be point, vertical or global");
    in.base = j.value("base", std::string("Q"));
    if (in.base != "Q" && in.base != "Fq") throw Error(ErrorCode::Parse, "base must be Q or Fq");
    if (in.audit != "global" || in.base == "Fq") {
      const long long p = j.at("p").get<long long>();
      if (p < 2) throw Error(ErrorCode::Parse, "p must be a prime");
      in.p = static_cast<u64>(p);
    }
    in.N = j.value("N", 1);
    in.n = j.value("n", 0);
    in.window = j.value("window", kDefaultWindow);
    in.f = atoms_from_json(j.at("f"));
    in.g = atoms_from_json(j.at("g"));
    if (j.contains("omit_places"))
      for (const auto& s : j.at("omit_places")) in.omit_places.push_back(s.get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return in;
}

AuditReport run_audit(const AuditInput& in) {
  AuditReport r;
  if (in.audit == "point")
    r = verify_point_reciprocity(in.f, in.g, in.p, in.N, in.window);
  else if (in.audit == "vertical")
    r = verify_vertical_reciprocity(in.f, in.g, in.p, in.N, in.n, in.window);
  else if (in.base == "Fq")
    r = verify_global_weil_fq(in.f, in.g, in.p);
  else
    r = verify_global_weil_q(in.f, in.g);
  if (!in.omit_places.empty()) {
    for (const auto& place : in.omit_places) {
      const auto it = std::find_if(r.entries.begin(), r.entries.end(), [&](const AuditEntry& e) { return e.place == place; });
      if (it == r.entries.end()) throw Error(ErrorCode::BadParameter, "no place '" + place + "' to omit");
      r.entries.erase(it);
    }
    refold(r);
  }
  return r;
}

std::string render(const SymbolValue& v, Format format) {
  if (format == Format::Json) return dump(symbol_json(v));
  return v.to_string() + "\n";
}

std::string render(const WittData& w, Format format) {
  if (format == Format::Json) {
    Json j;
    j["p_exp"] = w.p_exp;
    j["f0"] = gr_json(w.f0);
    j["w"] = w.w;
    Json neg = Json::array(), pos = Json::array();
    for (const auto& [i, a] : w.neg) neg.push_back({{"i", i}, {"value", gr_json(a)}});
    for (const auto& [i, a] : w.pos) pos.push_back({{"i", i}, {"value", gr_json(a)}});
    j["neg"] = neg;
    j["pos"] = pos;
    if (w.pos_hi < kExactWindow)
      j["pos_known_through"] = w.pos_hi;
    else
      j["pos_known_through"] = "exact";
    return dump(j);
  }
  std::ostringstream os;
  os << "p_exp  " << w.p_exp << "\nf0     " << w.f0.to_string() << "\nw      " << w.w << "\n";
  for (const auto& [i, a] : w.neg) os << "f_-" << i << "  " << a.to_string() << "\n";
  for (const auto& [i, a] : w.pos) os << "f_" << i << "   " << a.to_string() << "\n";
  if (w.pos_hi < kExactWindow) os << "positive parameters known through index " << w.pos_hi << "\n";
  return os.str();
}

std::string render(const PreparedForm& pf, Format format) {
  if (format == Format::Json) {
    Json j;
    j["p_val"] = pf.p_val;
    j["f0"] = gr_json(pf.f0);
    j["a"] = coeffs_json(pf.a);
    j["b"] = coeffs_json(pf.b);
    j["u"] = coeffs_json(pf.u);
    return dump(j);
  }
  auto line = [](const GRPoly& f) {
    std::string s;
    for (const auto& c : f) s += (s.empty() ? "" : " ") + c.to_string();
    return s;
  };
  std::ostringstream os;
  os << "p_val  " << pf.p_val << "\nf0     " << pf.f0.to_string() << "\na      " << line(pf.a) << "\nb      " << line(pf.b)
     << "\nu      " << line(pf.u) << "\n";
  return os.str();
}

std::string render(const AuditReport& r, Format format) {
  if (format == Format::Json) {
    Json j;
    j["audit"] = r.audit;
    j["base"] = r.base;
    if (r.p != 0) j["p"] = r.p;
    if (r.N != 0) j["N"] = r.N;
    Json places = Json::array();
    for (const auto& e : r.entries) {
      Json pj;
      pj["place"] = e.place;
      if (e.value) pj["symbol"] = symbol_json(*e.value);
      if (e.exact) pj["exact"] = to_string(*e.exact);
      places.push_back(pj);
    }
    j["places"] = places;
    if (r.product) j["product"] = symbol_json(*r.product);
    if (r.exact_product) j["exact_product"] = to_string(*r.exact_product);
    if (!r.abs_table.empty()) {
      Json rows = Json::array();
      for (const auto& row : r.abs_table) {
        Json vals = Json::array();
        for (const auto& v : row.values) vals.push_back(to_string(v));
        rows.push_back({{"place", row.place}, {"values", vals}, {"product", to_string(row.product)}});
      }
      j["abs_table"] = rows;
    }
    if (r.base != "Q") {
      j["target_prec"] = r.target;
      j["certified_prec"] = r.certified_prec;
    }
    j["pass"] = r.pass;
    return dump(j);
  }
  std::ostringstream os;
  os << r.audit << " audit over " << r.base;
  if (r.base != "Q") os << ", p = " << r.p << ", N = " << r.N;
  os << "\n";
  for (const auto& e : r.entries) {
    os << "  " << e.place << ": ";
    if (e.exact) os << to_string(*e.exact);
    if (e.exact && e.value) os << " = ";
    if (e.value) os << e.value->to_string();
    os << "\n";
  }
  if (r.exact_product) os << "product: " << to_string(*r.exact_product) << "\n";
  if (r.product && r.base != "Q") os << "product: " << r.product->to_string() << "\n";
  for (const auto& row : r.abs_table) os << "  |.|_" << row.place << " of the product: " << to_string(row.product) << "\n";
  os << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace katores
