// katores: compute symbols, Witt decompositions and preparations, and run
// reciprocity audits.
//
// Exit codes: 0 success, 1 reciprocity violated, 2 parse error,
// 3 precondition violated, 4 precision exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "katores/error.hpp"
#include "katores/io.hpp"

using namespace katores;

namespace {

struct Window {
  std::optional<long> lo;
  std::optional<long> hi;
};

Window parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::Parse, "window must be LO:HI");
  auto num = [&](const std::string& s) -> std::optional<long> {
    if (s.empty()) return std::nullopt;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw Error(ErrorCode::Parse, "bad window bound '" + s + "'");
    return v;
  };
  Window w{num(text.substr(0, colon)), num(text.substr(colon + 1))};
  if (w.lo && w.hi && *w.lo > *w.hi) throw Error(ErrorCode::BadParameter, "window needs LO <= HI");
  return w;
}

long default_hi(const LaurentPoly& f) { return std::max(30L, f.rbegin()->first); }

LaurentUnit unit_arg(const std::string& text, const Ring& ring, const Window& w) {
  const LaurentPoly f = parse_expression(text);
  if (f.empty()) throw Error(ErrorCode::BadParameter, "'" + text + "' is zero");
  return to_laurent_unit(f, ring, w.lo, w.hi.value_or(default_hi(f)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return 2;
    case ErrorCode::PrecisionExhausted: return 4;
    default: return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residue symbols and reciprocity audits on two-dimensional local fields"};
  app.require_subcommand(1);
  app.fallthrough();

  long p = 0;
  int N = 1;
  std::string window_text;
  std::string format_text = "table";
  app.add_option("--p", p, "residue characteristic (prime)");
  app.add_option("--N", N, "precision: work modulo p^N")->check(CLI::PositiveNumber);
  app.add_option("--window", window_text, "Laurent window LO:HI (either side may be empty)");
  app.add_option("--format", format_text, "output format")->check(CLI::IsMember({"json", "table"}));

  auto* symbol = app.add_subcommand("symbol", "Contou-Carrere, Kato or tame symbol of two Laurent polynomials");
  std::string f_text, g_text;
  bool cc = false, kato = false, tame = false;
  auto* cc_flag = symbol->add_flag("--cc", cc, "Contou-Carrere symbol");
  auto* kato_flag = symbol->add_flag("--kato", kato, "Kato residue symbol");
  auto* tame_flag = symbol->add_flag("--tame", tame, "tame symbol of the reductions");
  cc_flag->excludes(kato_flag)->excludes(tame_flag);
  kato_flag->excludes(tame_flag);
  symbol->add_option("f", f_text, "first argument")->required();
  symbol->add_option("g", g_text, "second argument")->required();

  auto* witt = app.add_subcommand("witt", "Witt parameters of a Laurent polynomial");
  std::string witt_text;
  witt->add_option("f", witt_text, "Laurent polynomial")->required();

  auto* prep = app.add_subcommand("prepare", "Weierstrass preparation of an integer polynomial");
  std::string prep_text;
  prep->add_option("f", prep_text, "polynomial in T")->required();

  auto* audit = app.add_subcommand("audit", "run a reciprocity audit described by a JSON file");
  std::string audit_path;
  audit->add_option("file", audit_path, "audit input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const Format format = format_text == "json" ? Format::Json : Format::Table;
  try {
    const Window window = window_text.empty() ? Window{} : parse_window(window_text);
    auto ring = [&] {
      if (p < 2) throw Error(ErrorCode::BadParameter, "--p must be a prime");
      return make_ring(static_cast<u64>(p), N);
    };

    if (*symbol) {
      if (!cc && !kato && !tame) throw Error(ErrorCode::Parse, "choose one of --cc, --kato, --tame");
      const Ring r = ring();
      const LaurentUnit f = unit_arg(f_text, r, window), g = unit_arg(g_text, r, window);
      if (tame) {
        const GRElem t = tame_boundary(f, g);
        std::cout << render(SymbolValue{0, t, 1}, format);
      } else {
        std::cout << render(cc ? contou_carrere(f, g) : kato_symbol(f, g), format);
      }
      return 0;
    }
    if (*witt) {
      std::cout << render(witt_decompose(unit_arg(witt_text, ring(), window)), format);
      return 0;
    }
    if (*prep) {
      if (p < 2) throw Error(ErrorCode::BadParameter, "--p must be a prime");
      std::cout << render(prepare(to_int_poly(parse_expression(prep_text)), static_cast<u64>(p), N), format);
      return 0;
    }
    AuditInput in = parse_audit_input(read_file(audit_path));
    if (app.get_option("--p")->count() > 0) in.p = static_cast<u64>(p);
    if (app.get_option("--N")->count() > 0) in.N = N;
    if (window.hi) in.window = *window.hi;
    const AuditReport report = run_audit(in);
    std::cout << render(report, format);
    return report.pass ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: Parse: " << e.what() << "\n";
    return 2;
  }
}
