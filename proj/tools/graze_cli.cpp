#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "graze/grazing.hpp"
#include "graze/ray_beam.hpp"
#include "graze/verify.hpp"

using namespace graze;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, usage = 1, numerical = 2, io = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "a:b:step" (inclusive) or "v1,v2,..."
std::vector<double> parse_values(const std::string& text, const char* flag) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v))
      throw UsageError(std::string(flag) + ": malformed number '" + s + "'");
    return v;
  };
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, sep);) parts.push_back(p);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
  };
  if (text.empty()) throw UsageError(std::string(flag) + ": empty value list");
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    const auto p = split(text, ':');
    if (p.size() != 3) throw UsageError(std::string(flag) + ": range must be a:b:step, got '" + text + "'");
    const double a = number(p[0]), b = number(p[1]), step = number(p[2]);
    if (!(step > 0) || b < a) throw UsageError(std::string(flag) + ": range needs a <= b and step > 0");
    const long n = std::lround(std::floor((b - a) / step + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(a + i * step);
    return out;
  }
  for (const auto& s : split(text, ',')) out.push_back(number(s));
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t) {
  std::string s;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    s += "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return s;
}

std::string to_json(const Table& t) {
  json arr = json::array();
  for (const auto& r : t.rows) {
    json o = json::object();
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::string& c = r[i];
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      if (c.empty())
        o[t.header[i]] = nullptr;
      else if (end && *end == '\0')
        o[t.header[i]] = v;
      else
        o[t.header[i]] = c;
    }
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string num(double v) { return fmt_num(v); }

struct Common {
  std::string out;
  std::string format = "csv";
  int threads = 0;
  double tol = 0;  // 0: command default
};

void emit_table(const Table& t, const Common& c) { emit(c.format == "json" ? to_json(t) : to_csv(t), c.out); }

int cmd_ray_trace(const std::string& ys, double xi0, double tau0, const Common& c) {
  const RayParams p0{0.0, 0.0, xi0, tau0};
  Table t{{"y", "x", "t", "xi", "eta", "tau", "hamiltonian"}, {}};
  for (double y : parse_values(ys, "--y")) {
    const PhasePoint p = flow_general(p0, y);
    t.rows.push_back({num(p.y), num(p.x), num(p.t), num(p.xi), num(p.eta), num(p.tau), num(hamiltonian(p))});
  }
  emit_table(t, c);
  return ok;
}

int cmd_beam_field(const std::string& xs, const std::string& ys, const std::string& ts, double k, const Common& c) {
  if (!(k > 0)) throw UsageError("--k must be positive");
  Table t{{"x", "y", "t", "k", "re_v", "im_v", "abs_v"}, {}};
  const auto X = parse_values(xs, "--x"), Y = parse_values(ys, "--y"), T = parse_values(ts, "--t");
  for (double x : X)
    for (double y : Y)
      for (double tt : T) {
        const cplx v = beam_field(x, y, tt, k);
        t.rows.push_back({num(x), num(y), num(tt), num(k), num(v.real()), num(v.imag()), num(std::abs(v))});
      }
  emit_table(t, c);
  return ok;
}

int cmd_beam_on_ray(const std::string& xs, const Common& c) {
  Table t{{"x", "re_v", "im_v", "abs_v"}, {}};
  for (double x : parse_values(xs, "--x")) {
    if (x < 0) throw UsageError("--x values must be >= 0");
    const cplx v = beam_on_ray(x);
    t.rows.push_back({num(x), num(v.real()), num(v.imag()), num(std::abs(v))});
  }
  emit_table(t, c);
  return ok;
}

struct Cell {
  double x = 0, k = 0;
  GrazingResult r;
  std::string status = "ok";
};

int cmd_graze_w(const std::string& xs, const std::string& ks, const std::string& method_name, const Common& c) {
  Method m;
  try {
    m = parse_method(method_name);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const auto X = parse_values(xs, "--x");
  for (double x : X)
    if (!(x > 0)) throw UsageError("--x values must be positive");
  std::vector<double> K{std::numeric_limits<double>::infinity()};
  if (m != Method::closed) {
    K = parse_values(ks, "--k");
    for (double k : K)
      if (!(k >= 10)) throw UsageError("--k values must be >= 10");
  }
  if (m == Method::spectral)
    for (double k : K)
      if (k > 1e4)
        throw UsageError("spectral method is limited to k <= 1e4 (3D quadrature budget); got k=" + num(k));
  const double tol = c.tol > 0 ? c.tol : (m == Method::spectral ? 1e-5 : 1e-9);

  std::vector<Cell> cells;
  for (double x : X)
    for (double k : K) cells.push_back({x, k, {}, "ok"});
  auto run = [&](Cell& cell, Exec inner) {
    try {
      cell.r = w_on_ray(cell.x, cell.k, m, tol, inner);
      if (!cell.r.converged) cell.status = "nonconverged";
    } catch (const NonConvergenceError& e) {
      cell.r.x = cell.x;
      cell.r.k = cell.k;
      cell.r.method = m;
      cell.r.w_value = e.best.value;
      cell.r.error_estimate = e.best.error_estimate;
      cell.r.converged = false;
      cell.status = "nonconverged";
    } catch (const Error& e) {
      cell.r.x = cell.x;
      cell.r.k = cell.k;
      cell.r.w_value = cplx(NAN, NAN);
      cell.r.converged = false;
      cell.status = std::string("error: ") + e.what();
    }
  };
  const long long n = static_cast<long long>(cells.size());
  if (m == Method::spectral) {
    for (auto& cell : cells) run(cell, Exec::parallel);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) run(cells[i], Exec::serial);
  }

  Table t{{"x", "k", "method", "re_w", "im_w", "abs_w", "re_closed", "im_closed", "rel_err", "quad_err", "status"}, {}};
  bool all_ok = true;
  for (const Cell& cell : cells) {
    const cplx closed = w_on_ray_closed(cell.x);
    const cplx w = cell.r.w_value;
    const bool is_closed = m == Method::closed;
    const double rel = is_closed ? 0.0 : std::abs(w - closed) / std::abs(closed);
    all_ok = all_ok && cell.status == "ok";
    std::string status = cell.status;
    for (char& ch : status)
      if (ch == ',' || ch == '\n') ch = ';';
    t.rows.push_back({num(cell.x), is_closed ? "" : num(cell.k), to_string(m), num(w.real()), num(w.imag()),
                      num(std::abs(w)), num(closed.real()), num(closed.imag()), num(rel),
                      num(cell.r.error_estimate), status});
  }
  emit_table(t, c);
  return all_ok ? ok : numerical;
}

int cmd_graze_reflected(const std::string& xs, const Common& c) {
  Table t{{"x", "abs_v", "abs_w", "abs_v_minus_w", "ratio"}, {}};
  for (double x : parse_values(xs, "--x")) {
    if (!(x > 0)) throw UsageError("--x values must be positive");
    const double v = std::abs(beam_on_ray(x)), w = std::abs(w_on_ray_closed(x));
    const double d = std::abs(reflected_amplitude(x));
    t.rows.push_back({num(x), num(v), num(w), num(d), num(d / v)});
  }
  emit_table(t, c);
  return ok;
}

json report_json(const VerificationReport& r) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    json o;
    o["name"] = c.name;
    o["expected"] = c.expected;
    o["actual"] = c.actual;
    o["tolerance"] = c.tolerance;
    o["pass"] = c.pass;
    o["detail"] = c.detail;
    o["kind"] = c.kind == CheckKind::near ? "abs_diff" : c.kind == CheckKind::at_most ? "at_most" : "at_least";
    checks.push_back(o);
  }
  json o;
  o["suite"] = r.suite;
  o["checks"] = checks;
  o["overall"] = r.overall;
  return o;
}

int cmd_verify(const std::string& suite, const Common& c) {
  const auto& names = verification_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw UsageError("unknown suite '" + suite + "'");
  const VerificationReport r = run_verification(suite);
  emit(report_json(r).dump(2) + "\n", c.out);
  return r.overall ? ok : numerical;
}

void apply_threads(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("GRAZE_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (!end || *end != '\0' || v <= 0) throw UsageError("GRAZE_THREADS must be a positive integer");
      n = static_cast<int>(v);
    }
  }
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grazing Gaussian beam laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--out", common.out, "Output path (stdout when omitted)");
  app.add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", common.threads, "Thread budget (overrides GRAZE_THREADS)")->check(CLI::PositiveNumber);
  app.add_option("--tol", common.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);

  std::string xs, ys = "0", ts = "0", ks, method = "closed", suite;
  double k = 100, xi0 = 0, tau0 = -1;

  auto* ray = app.add_subcommand("ray", "Bicharacteristics")->require_subcommand(1);
  auto* trace = ray->add_subcommand("trace", "Tabulate a ray with eta = 1");
  trace->add_option("--y", ys, "y values: a:b:step or a comma list")->required();
  trace->add_option("--xi0", xi0, "Initial xi (default 0: the central ray)");
  trace->add_option("--tau0", tau0, "Initial tau (default -1)");

  auto* beam = app.add_subcommand("beam", "Gaussian beam")->require_subcommand(1);
  auto* field = beam->add_subcommand("field", "v(x, y, t; k) on a grid");
  field->add_option("--x", xs)->required();
  field->add_option("--y", ys);
  field->add_option("--t", ts);
  field->add_option("--k", k);
  auto* on_ray = beam->add_subcommand("on-ray", "v on the central ray");
  on_ray->add_option("--x", xs)->required();

  auto* graze = app.add_subcommand("graze", "Grazing amplitude")->require_subcommand(1);
  auto* gw = graze->add_subcommand("w", "w on the ray by a chosen method");
  gw->add_option("--x", xs)->required();
  gw->add_option("--k", ks, "k values (ignored by the closed form)");
  gw->add_option("--method", method)->check(CLI::IsMember({"closed", "u-integral", "z-integral", "spectral"}));
  auto* refl = graze->add_subcommand("reflected", "|v|, |w|, |v - w| on the ray");
  refl->add_option("--x", xs)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(verification_suites()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    apply_threads(common.threads);
    if (*trace) return cmd_ray_trace(ys, xi0, tau0, common);
    if (*field) return cmd_beam_field(xs, ys, ts, k, common);
    if (*on_ray) return cmd_beam_on_ray(xs, common);
    if (*gw) {
      if (method != "closed" && ks.empty()) throw UsageError("--k is required for method " + method);
      return cmd_graze_w(xs, ks, method, common);
    }
    if (*refl) return cmd_graze_reflected(xs, common);
    if (*verify) return cmd_verify(suite, common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return io;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return numerical;
  }
  return usage;
}
