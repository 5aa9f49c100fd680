#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "localspec/checks.hpp"
#include "localspec/gamma_spectral.hpp"
#include "localspec/mellin.hpp"
#include "localspec/padic.hpp"

namespace localspec::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

using Cell = std::variant<double, long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
      }
      out << obj.dump() << '\n';
    }
    return;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const auto* d = std::get_if<double>(&row[i])) {
        out << format_double(*d);
      } else if (const auto* l = std::get_if<long>(&row[i])) {
        out << *l;
      } else {
        const auto& text = std::get<std::string>(row[i]);
        if (text.find_first_of(",\"\n") == std::string::npos) {
          out << text;
        } else {
          out << '"';
          for (char c : text) out << (c == '"' ? "\"\"" : std::string(1, c));
          out << '"';
        }
      }
    }
    out << '\n';
  }
}

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
  return v;
}

long parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError(what + ": '" + text + "' is not an integer");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

/// a:b:n
std::vector<double> parse_range(const std::string& text, const std::string& flag) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError(flag + " expects a:b:n, got '" + text + "'");
  const double a = parse_number(parts[0], flag);
  const double b = parse_number(parts[1], flag);
  const long n = parse_integer(parts[2], flag);
  if (n < 1 || n > 10000000) throw UsageError(flag + ": n must be in [1, 1e7]");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = (n == 1) ? a : a + (b - a) * i / (n - 1);
  return out;
}

Complex parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--s expects re,im, got '" + text + "'");
  return {parse_number(parts[0], "--s"), parse_number(parts[1], "--s")};
}

CharacterComponent parse_component(const std::string& place, const std::string& component) {
  if (place == "real") {
    if (component == "+") return CharacterComponent::even();
    if (component == "-") return CharacterComponent::odd();
    throw UsageError("--component for the real place must be + or -");
  }
  if (place == "complex") {
    const long n = parse_integer(component, "--component");
    if (std::abs(n) > 1000000) throw UsageError("--component: |N| too large");
    return CharacterComponent::complex(static_cast<int>(n));
  }
  if (place.rfind("finite:", 0) == 0) {
    const double q = parse_number(place.substr(7), "--place");
    if (!(q > 1.0)) throw UsageError("--place finite:Q needs Q > 1");
    if (component == "unram") return CharacterComponent::unramified(q);
    if (component == "ram") return CharacterComponent::ramified(q);
    throw UsageError("--component for a finite place must be unram or ram");
  }
  throw UsageError("--place must be real, complex or finite:Q");
}

BandKind parse_band(const std::string& op) {
  if (op == "A") return BandKind::A();
  if (op == "H") return BandKind::H();
  if (op == "K") return BandKind::K();
  if (op.rfind("KN:", 0) == 0) {
    const long n = parse_integer(op.substr(3), "--op");
    if (n < 1 || n > 64) throw UsageError("--op KN:N needs 1 <= N <= 64");
    return BandKind::KN(static_cast<int>(n));
  }
  throw UsageError("--op must be A, H, K or KN:N");
}

struct Options {
  std::string place = "real";
  std::string component = "+";
  std::string op = "H";
  std::string t;
  std::string s;
  std::string theta = "0:6.283185307179586:9";
  std::string format = "csv";
  std::string emit = "matrix";
  std::string suite = "all";
  std::string bump = "all";
  double q = 0.0;
  int M = 8;
  double tol = 1e-12;
  std::size_t n = std::size_t{1} << 16;
  double Y = 64.0;
};

Table run_gamma(const Options& o) {
  const CharacterComponent chi = parse_component(o.place, o.component);
  Table t;
  if (!o.t.empty()) {
    t.columns = {"t", "re", "im"};
    for (double x : parse_range(o.t, "--t")) {
      const Complex g = gamma_factor(chi, critical_point(x));
      t.rows.push_back({x, g.real(), g.imag()});
    }
    return t;
  }
  const Complex s = o.s.empty() ? Complex(0.5, 0.0) : parse_point(o.s);
  const Complex g = gamma_factor(chi, s);
  t.columns = {"s_re", "s_im", "re", "im"};
  t.rows.push_back({s.real(), s.imag(), g.real(), g.imag()});
  return t;
}

Complex spectral_value(const std::string& op, const CharacterComponent& chi, Complex s) {
  if (op == "H") return spectral_h(chi, s);
  if (op == "K") return spectral_k(chi, s);
  const BandKind kind = parse_band(op);
  if (kind.type() != BandKind::Type::KN) throw UsageError("--op must be H, K or KN:N");
  return spectral_kn(chi, kind.order(), s);
}

Table run_spectral(const Options& o) {
  const CharacterComponent chi = parse_component(o.place, o.component);
  spectral_value(o.op, CharacterComponent::even(), 0.5);  // validates --op early
  Table t;
  if (!o.s.empty()) {
    const Complex s = parse_point(o.s);
    const Complex v = spectral_value(o.op, chi, s);
    t.columns = {"s_re", "s_im", "re", "im"};
    t.rows.push_back({s.real(), s.imag(), v.real(), v.imag()});
    return t;
  }
  t.columns = {"t", "re", "im"};
  for (double x : parse_range(o.t.empty() ? "0:10:11" : o.t, "--t")) {
    const Complex v = spectral_value(o.op, chi, critical_point(x));
    t.rows.push_back({x, v.real(), v.imag()});
  }
  return t;
}

Table run_minima(const Options& o) {
  const CharacterComponent chi = parse_component(o.place, o.component);
  Table t;
  t.columns = {"component", "mu", "argmin"};
  if (chi.place().archimedean()) {
    t.rows.push_back({chi.label(), minimum_h(chi), 0.0});
  } else if (chi.kind() == ComponentKind::unramified) {
    const SymbolRange r = symbol_range(BandKind::H(), chi.place().q());
    t.rows.push_back({chi.label(), r.min, r.argmin / std::log(chi.place().q())});
  } else {
    throw RamifiedUnsupported("minima: H is not exposed on ramified components");
  }
  return t;
}

void run_padic(const Options& o, std::ostream& out) {
  if (!(o.q > 1.0)) throw UsageError("padic: --q must be given and exceed 1");
  if (o.M < 1 || o.M > 2048) throw UsageError("padic: --M must be in [1, 2048]");
  const BandKind kind = parse_band(o.op);
  Table t;
  if (o.emit == "matrix") {
    const OperatorTruncation x = build_truncation(kind, o.q, o.M);
    if (o.format == "json") {
      out << to_json(x).dump() << '\n';
    } else {
      write_csv(out, x);
    }
    return;
  }
  if (kind.type() == BandKind::Type::A && o.emit != "eigs") {
    throw UsageError("padic: A has no circle symbol; use --emit matrix or eigs");
  }
  if (o.emit == "eigs") {
    const ExtremeEigenvalues e = extreme_eigenvalues(build_truncation(kind, o.q, o.M), o.tol);
    t.columns = {"M", "min", "max", "symbol_min", "symbol_max", "iterations"};
    if (kind.type() == BandKind::Type::A) {
      t.rows.push_back({static_cast<long>(o.M), e.min, e.max, std::string("-inf"),
                        std::string("inf"), static_cast<long>(e.iterations)});
    } else {
      const SymbolRange r = symbol_range(kind, o.q);
      t.rows.push_back({static_cast<long>(o.M), e.min, e.max, r.min, r.max,
                        static_cast<long>(e.iterations)});
    }
  } else if (o.emit == "symbol") {
    t.columns = {"theta", "re", "im"};
    for (double th : parse_range(o.theta, "--theta")) {
      const Complex v = symbol(kind, o.q, th);
      t.rows.push_back({th, v.real(), v.imag()});
    }
  } else if (o.emit == "range") {
    const SymbolRange r = symbol_range(kind, o.q);
    t.columns = {"min", "max", "argmin", "argmax", "error", "quoted_k_bound"};
    t.rows.push_back({r.min, r.max, r.argmin, r.argmax, r.error, quoted_k_bound(o.q)});
  } else {
    throw UsageError("--emit must be matrix, eigs, symbol or range");
  }
  emit(t, o.format, out);
}

void run_mellin(const Options& o, std::ostream& out) {
  LineGrid grid(o.n, o.Y);
  std::vector<NamedFunction> bumps;
  for (auto& b : bump_suite(grid)) {
    if (o.bump == "all" || o.bump == b.name) bumps.push_back(std::move(b));
  }
  if (bumps.empty()) throw UsageError("--bump must be even, odd, mixed or all");

  if (o.emit == "profile" || o.emit == "direct") {
    if (bumps.size() != 1) throw UsageError("--emit " + o.emit + " needs a single --bump");
    const SampledLineFunction& f = bumps[0].f;
    if (o.emit == "direct") {
      const DirectKind kind = parse_direct_kind(o.op);
      write_csv(out, direct_apply(kind, f));
      return;
    }
    if (o.component != "+" && o.component != "-") {
      throw UsageError("--component must be + or - for profiles");
    }
    const auto F = to_multiplicative(f);
    write_csv(out, *F.find(o.component == "+" ? CharacterComponent::even()
                                              : CharacterComponent::odd()));
    return;
  }
  if (o.emit != "residuals") throw UsageError("--emit must be residuals, profile or direct");

  Table t;
  t.columns = {"bump", "op", "residual", "tolerance", "status"};
  bool all_ok = true;
  for (const auto& [name, f] : bumps) {
    const auto F = to_multiplicative(f);
    for (const auto& [op, tol] : {std::pair{std::string("H"), 5e-3}, std::pair{std::string("K"), 1e-2}}) {
      const SpectralOp sop = parse_spectral_op(op);
      const auto spectral = from_multiplicative(apply_spectral(sop, F), grid);
      const double res = relative_l2(direct_apply(parse_direct_kind(op), f), spectral, true);
      all_ok = all_ok && res <= tol;
      t.rows.push_back({name, op, res, tol, std::string(res <= tol ? "pass" : "FAIL")});
    }
  }
  emit(t, o.format, out);
  if (!all_ok) throw std::runtime_error("mellin-check: residual above tolerance");
}

int run_check(const Options& o, std::ostream& out) {
  if (o.suite != "all") {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == o.suite;
    if (!known) throw UsageError("--suite must be all, specfun, gamma, padic or mellin");
  }
  const auto results = run_suite(o.suite);
  Table t;
  t.columns = {"suite", "criterion", "check", "measured", "tolerance", "status"};
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    t.rows.push_back({r.suite, static_cast<long>(r.criterion), r.name, r.measured, r.tolerance,
                      status_label(r)});
  }
  emit(t, o.format, out);
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectral data of the conductor and commutator operators on local fields",
               "localspec"};
  app.require_subcommand(1);

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_place = [&o](CLI::App* sub) {
    sub->add_option("--place", o.place, "real, complex or finite:Q");
    sub->add_option("--component", o.component, "+ or - (real), N (complex), unram or ram");
  };

  auto* gamma = app.add_subcommand("gamma", "Gamma factor at s or along the critical line");
  add_place(gamma);
  gamma->add_option("--s", o.s, "point re,im (default 0.5,0)");
  gamma->add_option("--t", o.t, "critical-line grid a:b:n");
  add_common(gamma);

  auto* spectral = app.add_subcommand("spectral", "Spectral function H, K or K_N");
  add_place(spectral);
  spectral->add_option("--op", o.op, "H, K or KN:N");
  spectral->add_option("--s", o.s, "point re,im");
  spectral->add_option("--t", o.t, "critical-line grid a:b:n (default 0:10:11)");
  add_common(spectral);

  auto* minima = app.add_subcommand("minima", "Minimum of h on the critical line");
  add_place(minima);
  add_common(minima);

  auto* padic = app.add_subcommand("padic", "Exact operator truncations over Q_p");
  padic->add_option("--q", o.q, "residue cardinality q > 1")->required();
  padic->add_option("--op", o.op, "A, H, K or KN:N");
  padic->add_option("--M", o.M, "truncation half-width (default 8)");
  padic->add_option("--emit", o.emit, "matrix, eigs, symbol or range");
  padic->add_option("--theta", o.theta, "symbol grid a:b:n");
  padic->add_option("--tol", o.tol, "relative eigenvalue tolerance (default 1e-12)");
  add_common(padic);

  auto* mellin = app.add_subcommand("mellin-check", "Direct vs spectral operators on test bumps");
  mellin->add_option("--bump", o.bump, "even, odd, mixed or all");
  mellin->add_option("--emit", o.emit, "residuals, profile or direct");
  mellin->add_option("--op", o.op, "A, B, H or K for --emit direct");
  mellin->add_option("--component", o.component, "+ or - for --emit profile");
  mellin->add_option("--n", o.n, "line grid points (power of two, default 65536)");
  mellin->add_option("--Y", o.Y, "line grid half-extent (default 64)");
  add_common(mellin);

  auto* check = app.add_subcommand("check", "Run the invariant suites");
  check->add_option("--suite", o.suite, "all, specfun, gamma, padic or mellin");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "localspec: " << e.what() << '\n';
    return 2;
  }

  // mellin-check defaults differ from padic's
  if (mellin->parsed() && mellin->count("--emit") == 0) o.emit = "residuals";

  try {
    if (gamma->parsed()) {
      emit(run_gamma(o), o.format, out);
    } else if (spectral->parsed()) {
      emit(run_spectral(o), o.format, out);
    } else if (minima->parsed()) {
      emit(run_minima(o), o.format, out);
    } else if (padic->parsed()) {
      run_padic(o, out);
    } else if (mellin->parsed()) {
      run_mellin(o, out);
    } else if (check->parsed()) {
      return run_check(o, out);
    }
  } catch (const UsageError& e) {
    err << "localspec: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedKind& e) {
    err << "localspec: " << e.what() << '\n';
    return 2;
  } catch (const InvalidBandKind& e) {
    err << "localspec: " << e.what() << '\n';
    return 2;
  } catch (const RamifiedUnsupported& e) {
    err << "localspec: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "localspec: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace localspec::cli
