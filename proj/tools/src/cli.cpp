#include "ellwin/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ellwin/bounds.hpp"
#include "ellwin/errors.hpp"
#include "ellwin/geometry.hpp"
#include "ellwin/parallel.hpp"

namespace ellwin::cli {

namespace {

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_number(const std::string &s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception &) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double single_value(const std::string &text, const char *name) {
  if (text.empty()) throw UsageError(std::string("--") + name + " is required");
  const auto v = parse_grid(text);
  if (v.size() != 1) throw UsageError(std::string("--") + name + " takes a single value here");
  if (!(v.front() > 0.0)) throw UsageError(std::string("--") + name + " must be positive");
  return v.front();
}

void print_result(std::ostream &out, double a, double b, const EnergyResult &r, bool absolute) {
  const double unit = absolute ? std::numbers::pi * std::numbers::pi : 1.0;
  const SweepRow shape = describe_point(a, b);
  out << "a = " << fmt(a) << ", b = " << fmt(b) << ", e = " << fmt(shape.e) << ", r0 = " << fmt(shape.r0)
      << ", m = " << r.m << "\n";
  if (r.circular_route) {
    out << "route: circular matcher at radius " << fmt(0.5 * (a + b)) << " (e < " << kNearCircularEccentricity
        << ")\n";
  } else {
    out << "route: elliptic matcher\n";
  }
  out << "E = " << fmt(r.E * unit) << (absolute ? " (absolute, (1/d)^2)" : " ((pi/d)^2)") << "\n";
  out << "N_used = " << r.N_used << ", delta_last = " << fmt(r.delta_last * unit)
      << ", converged = " << (r.converged ? "yes" : "no") << "\n";
  const Theorem1Report t = theorem1_check(r.E, a, b);
  out << "bounds: " << fmt(t.bounds.lower * unit) << " <= E <= " << fmt(t.bounds.upper * unit) << "  (upper pair ("
      << t.bounds.index_pair_upper.first << "," << t.bounds.index_pair_upper.second << "))  "
      << (t.ok ? "ok" : "VIOLATED") << "\n";
  out << "trace:";
  for (const TruncationStep &s : r.trace) out << " N=" << s.N << ":" << fmt(s.E * unit);
  out << "\n";
}

struct Settings {
  std::string a, b;
  int m = 0;
  int modes = 24;
  double tol = 1e-9;
  int scan_points = 600;
  std::string out;
  int jobs = hardware_jobs();
  bool absolute = false;
  std::string mode = "surface";
  std::optional<double> energy;
  std::string suite = "all";

  SolverOptions solver() const {
    if (modes < 1) throw UsageError("--modes must be at least 1");
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");
    if (scan_points < 4) throw UsageError("--scan-points must be at least 4");
    if (m < 0 || m > kMaxMathieuOrder) throw UsageError("--m must lie in 0..20");
    SolverOptions o;
    o.n_max = modes;
    o.n_start = std::min(o.n_start, modes);
    o.tol_E = tol;
    o.scan_points = scan_points;
    return o;
  }
};

int cmd_solve(const Settings &s, std::ostream &out) {
  const double a = single_value(s.a, "a");
  const double b = single_value(s.b, "b");
  const SolverOptions opts = s.solver();
  std::ofstream file;
  if (!s.out.empty()) {
    file.open(s.out);
    if (!file) throw std::ios_base::failure("cannot write " + s.out);
  }
  const EnergyResult r = ground_energy(a, b, s.m, opts);
  print_result(out, a, b, r, s.absolute);
  if (file.is_open()) {
    SweepRow row = describe_point(a, b);
    row.result = r;
    write_csv(file, {row}, s.absolute);
    if (!file) throw std::ios_base::failure("write failed: " + s.out);
  }
  return kOk;
}

int cmd_sweep(const Settings &s, std::ostream &out, std::ostream &err) {
  SweepSpec spec;
  spec.mode = parse_sweep_mode(s.mode);
  if (s.a.empty()) throw UsageError("--a grid is required");
  spec.a_values = parse_grid(s.a);
  if (spec.mode != SweepMode::circular) {
    if (s.b.empty()) throw UsageError("--b grid is required");
    spec.b_values = parse_grid(s.b);
  }
  spec.m = s.m;
  spec.solver = s.solver();
  spec.out = s.out;
  spec.jobs = s.jobs;
  spec.absolute = s.absolute;
  validate(spec);

  std::ofstream file;
  if (!spec.out.empty()) {
    file.open(spec.out);
    if (!file) throw std::ios_base::failure("cannot write " + spec.out);
  }
  const auto rows = run_sweep(spec);
  std::ostream &csv = spec.out.empty() ? out : file;
  write_csv(csv, rows, spec.absolute);
  if (!csv) throw std::ios_base::failure("write failed");

  const auto failed = std::count_if(rows.begin(), rows.end(), [](const SweepRow &r) { return !r.result; });
  err << "sweep " << to_string(spec.mode) << ": " << rows.size() << " points, " << failed << " failed\n";
  if (failed > 0) {
    if (!spec.out.empty()) {
      const std::string path = spec.out + ".failures.csv";
      std::ofstream ff(path);
      if (!ff) throw std::ios_base::failure("cannot write " + path);
      write_failures(ff, rows);
    } else {
      write_failures(err, rows);
    }
    return kSolverFailure;
  }
  return kOk;
}

int cmd_bounds(const Settings &s, std::ostream &out) {
  double a = single_value(s.a, "a");
  double b = single_value(s.b, "b");
  if (b > a) std::swap(a, b);
  const double unit = s.absolute ? std::numbers::pi * std::numbers::pi : 1.0;
  const auto [lo, hi] = discrete_window();
  out << "discrete window: (" << fmt(lo * unit) << ", " << fmt(hi * unit) << ")\n";
  out << "essential spectrum bottom: " << fmt(essential_spectrum_bottom() * unit) << "\n";
  for (const double xi : {a, b}) {
    out << "cylinder eigenvalues below " << fmt(hi * unit) << " at radius " << fmt(xi) << ":";
    bool any = false;
    for (int m = 0; m <= kBoundsIndexCap; ++m) {
      for (int n = 1; n <= kBoundsIndexCap; ++n) {
        const double v = cylinder_eigenvalue(m, n, 0, xi);
        if (v < hi) {
          out << " (" << m << "," << n << ")=" << fmt(v * unit);
          any = true;
        }
      }
    }
    out << (any ? "\n" : " none\n");
  }
  double E = 0.0;
  if (s.energy) {
    E = *s.energy / unit;
    out << "E = " << fmt(E * unit) << " (given)\n";
  } else {
    E = ground_energy(a, b, s.m, s.solver()).E;
    out << "E = " << fmt(E * unit) << " (ground state)\n";
  }
  const Theorem1Report t = theorem1_check(E, a, b);
  out << "theorem1: lower = " << fmt(t.bounds.lower * unit);
  if (t.bounds.index_pair_lower.first < 0) {
    out << " (Neumann floor)";
  } else {
    out << " (" << t.bounds.index_pair_lower.first << "," << t.bounds.index_pair_lower.second << ")";
  }
  out << ", upper = " << fmt(t.bounds.upper * unit) << " (" << t.bounds.index_pair_upper.first << ","
      << t.bounds.index_pair_upper.second << "), ok = " << (t.ok ? "true" : "false")
      << ", printed_pair_ok = " << (t.printed_pair_ok ? "true" : "false") << "\n";
  return t.ok ? kOk : kSolverFailure;
}

int cmd_check(const Settings &s, std::ostream &out) {
  const SolverOptions opts = s.solver();
  std::vector<CheckLine> lines;
  if (s.suite == "bounds" || s.suite == "all") {
    auto b = run_check_bounds(opts, s.jobs);
    lines.insert(lines.end(), b.begin(), b.end());
  }
  if (s.suite == "oracle" || s.suite == "all") {
    auto o = run_check_oracle(opts, s.jobs);
    lines.insert(lines.end(), o.begin(), o.end());
  }
  int failed = 0;
  for (const CheckLine &l : lines) {
    out << (l.passed ? "PASS " : "FAIL ") << l.name << ": " << l.detail << "\n";
    failed += l.passed ? 0 : 1;
  }
  out << "summary: passed=" << lines.size() - static_cast<std::size_t>(failed) << " failed=" << failed << "\n";
  return failed == 0 ? kOk : kSolverFailure;
}

} // namespace

SweepMode parse_sweep_mode(const std::string &name) {
  if (name == "surface") return SweepMode::surface;
  if (name == "fixed_a") return SweepMode::fixed_a;
  if (name == "fixed_b") return SweepMode::fixed_b;
  if (name == "fixed_b_vs_r0") return SweepMode::fixed_b_vs_r0;
  if (name == "circular") return SweepMode::circular;
  throw UsageError("unknown sweep mode '" + name + "'");
}

const char *to_string(SweepMode mode) {
  switch (mode) {
  case SweepMode::surface: return "surface";
  case SweepMode::fixed_a: return "fixed_a";
  case SweepMode::fixed_b: return "fixed_b";
  case SweepMode::fixed_b_vs_r0: return "fixed_b_vs_r0";
  case SweepMode::circular: return "circular";
  }
  return "?";
}

std::vector<double> parse_grid(const std::string &text) {
  const std::string t = trim(text);
  if (t.empty()) throw UsageError("empty grid");
  if (t.find(':') != std::string::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 3) throw UsageError("range must be start:stop:count, got '" + t + "'");
    const double start = parse_number(trim(parts[0]));
    const double stop = parse_number(trim(parts[1]));
    const double count_d = parse_number(trim(parts[2]));
    const int count = static_cast<int>(count_d);
    if (count != count_d || count < 2) throw UsageError("range count must be an integer >= 2");
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
    v.back() = stop;
    return v;
  }
  std::vector<double> v;
  for (const auto &p : split(t, ',')) v.push_back(parse_number(trim(p)));
  return v;
}

void validate(const SweepSpec &spec) {
  const auto check = [](const std::vector<double> &g, const char *name) {
    if (g.empty()) throw UsageError(std::string(name) + " grid is empty");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!(g[i] > 0.0) || !std::isfinite(g[i])) throw UsageError(std::string(name) + " values must be positive");
      if (i > 0 && !(g[i] > g[i - 1])) throw UsageError(std::string(name) + " grid must be strictly increasing");
    }
  };
  check(spec.a_values, "a");
  if (spec.mode != SweepMode::circular) check(spec.b_values, "b");
  if (spec.jobs < 1) throw UsageError("--jobs must be at least 1");
}

std::vector<std::pair<double, double>> sweep_points(const SweepSpec &spec) {
  std::vector<std::pair<double, double>> pts;
  switch (spec.mode) {
  case SweepMode::surface:
  case SweepMode::fixed_a:
    for (double a : spec.a_values)
      for (double b : spec.b_values) pts.emplace_back(a, b);
    break;
  case SweepMode::fixed_b:
    for (double b : spec.b_values)
      for (double a : spec.a_values) pts.emplace_back(a, b);
    break;
  case SweepMode::fixed_b_vs_r0:
    for (double b : spec.b_values) {
      std::vector<std::pair<double, double>> block;
      for (double a : spec.a_values) block.emplace_back(a, b);
      std::stable_sort(block.begin(), block.end(), [](const auto &x, const auto &y) {
        return describe_point(x.first, x.second).r0 < describe_point(y.first, y.second).r0;
      });
      pts.insert(pts.end(), block.begin(), block.end());
    }
    break;
  case SweepMode::circular:
    for (double a : spec.a_values) pts.emplace_back(a, a);
    break;
  }
  return pts;
}

SweepRow describe_point(double a, double b) {
  SweepRow row;
  row.a = a;
  row.b = b;
  const double hi = std::max(a, b), lo = std::min(a, b);
  if (hi == lo) {
    row.e = 0.0;
    row.r0 = std::numeric_limits<double>::infinity();
  } else {
    const Ellipse el = ellipse_from_axes(hi, lo);
    row.e = el.e;
    row.r0 = el.r0;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
  validate(spec);
  const auto pts = sweep_points(spec);
  return parallel_map(pts, spec.jobs, [&](const std::pair<double, double> &p) {
    SweepRow row = describe_point(p.first, p.second);
    try {
      row.result = ground_energy(p.first, p.second, spec.m, spec.solver);
    } catch (const std::exception &ex) {
      row.diagnostic = ex.what();
    }
    return row;
  });
}

std::string csv_header() { return "a,b,e,r0,E,N_used,delta_last,bounds_ok"; }

void write_csv(std::ostream &os, const std::vector<SweepRow> &rows, bool absolute) {
  const double unit = absolute ? std::numbers::pi * std::numbers::pi : 1.0;
  os << csv_header() << "\n";
  for (const SweepRow &r : rows) {
    os << fmt(r.a) << ',' << fmt(r.b) << ',' << fmt(r.e) << ',' << fmt(r.r0) << ',';
    if (r.result) {
      os << fmt(r.result->E * unit) << ',' << r.result->N_used << ',' << fmt(r.result->delta_last * unit) << ','
         << (r.result->bounds_ok ? "true" : "false");
    } else {
      os << ",,,";
    }
    os << "\n";
  }
}

void write_failures(std::ostream &os, const std::vector<SweepRow> &rows) {
  os << "a,b,diagnostic\n";
  for (const SweepRow &r : rows) {
    if (r.result) continue;
    std::string d = r.diagnostic;
    std::replace(d.begin(), d.end(), '"', '\'');
    os << fmt(r.a) << ',' << fmt(r.b) << ",\"" << d << "\"\n";
  }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Bound states of a quantum layer with an elliptic Neumann window", "ellwin"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags override it");

  Settings s;
  app.add_option("--a", s.a, "semi-axis a: value, list x1,x2,... or start:stop:count")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--b", s.b, "semi-axis b: value, list or range")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--m", s.m, "angular order")->capture_default_str();
  app.add_option("--modes", s.modes, "largest truncation N (modes per region)")->capture_default_str();
  app.add_option("--tol", s.tol, "root tolerance in energy")->capture_default_str();
  app.add_option("--scan-points", s.scan_points, "bracketing grid size")->capture_default_str();
  app.add_option("--out", s.out, "CSV output path");
  app.add_option("--jobs", s.jobs, "worker threads for sweeps and checks")->capture_default_str();
  app.add_flag("--absolute", s.absolute, "report energies multiplied by pi^2");
  app.add_option("--mode", s.mode, "sweep mode: surface, fixed_a, fixed_b, fixed_b_vs_r0, circular")
      ->capture_default_str();
  app.add_option("--energy", s.energy, "energy to bracket (bounds); solved when omitted");

  auto *solve = app.add_subcommand("solve", "ground state of one window")->fallthrough();
  auto *sweep = app.add_subcommand("sweep", "ground state over an (a, b) grid, CSV output")->fallthrough();
  auto *bounds = app.add_subcommand("bounds", "thresholds and Bessel-zero bracketing")->fallthrough();
  auto *check = app.add_subcommand("check", "self-consistency suites")->fallthrough();
  check->add_option("suite", s.suite, "bounds, oracle or all")
      ->check(CLI::IsMember({"bounds", "oracle", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError &e) {
    err << e.what() << "\n";
    return kIoFailure;
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    if (solve->parsed()) return cmd_solve(s, out);
    if (sweep->parsed()) return cmd_sweep(s, out, err);
    if (bounds->parsed()) return cmd_bounds(s, out);
    if (check->parsed()) return cmd_check(s, out);
  } catch (const std::ios_base::failure &e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const std::exception &e) {
    err << "solver failure: " << e.what() << "\n";
    return kSolverFailure;
  }
  return kInvalidArguments;
}

} // namespace ellwin::cli
