#include <cmath>
#include <cstdio>
#include <string>

#include "ellwin/bounds.hpp"
#include "ellwin/cli.hpp"
#include "ellwin/mathieu.hpp"
#include "ellwin/oracle.hpp"
#include "ellwin/parallel.hpp"

namespace ellwin::cli {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

template <class F> CheckLine guarded(const std::string &name, F f) {
  try {
    return f();
  } catch (const std::exception &e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

} // namespace

std::vector<CheckLine> run_check_bounds(const SolverOptions &opts, int jobs) {
  const std::vector<double> axes{0.4, 0.7, 1.0, 1.3, 1.6};
  std::vector<std::pair<double, double>> pts;
  for (double a : axes)
    for (double b : axes) pts.emplace_back(a, b);
  return parallel_map(pts, jobs, [&](const std::pair<double, double> &p) {
    const std::string name = "bounds(" + num(p.first) + "," + num(p.second) + ")";
    return guarded(name, [&] {
      const EnergyResult r = ground_energy(p.first, p.second, 0, opts);
      const Theorem1Report t = theorem1_check(r.E, p.first, p.second);
      return CheckLine{name, t.ok,
                       "E=" + num(r.E) + " in [" + num(t.bounds.lower) + ", " + num(t.bounds.upper) + "]"};
    });
  });
}

std::vector<CheckLine> run_check_oracle(const SolverOptions &opts, int jobs) {
  std::vector<CheckLine> lines;

  lines.push_back(guarded("circular_limit", [&] {
    const std::vector<double> deltas{0.10, 0.07, 0.05};
    const auto gaps = parallel_map(deltas, jobs, [&](double d) {
      CircularProblem cp;
      cp.radius = 1.0 - d / 2.0;
      cp.N = opts.n_max;
      const double ell = find_bound_states(ellipse_from_axes(1.0, 1.0 - d), 0, opts).front().E;
      return std::abs(ell - circular_ground_energy(cp, opts).E);
    });
    const bool ok = gaps[0] > gaps[1] && gaps[1] > gaps[2] && gaps[2] <= 0.02;
    return CheckLine{"circular_limit", ok,
                     "gaps " + num(gaps[0]) + ", " + num(gaps[1]) + ", " + num(gaps[2]) + " (last <= 0.02)"};
  }));

  lines.push_back(guarded("ode_ce", [] {
    const MathieuSolution sol = char_even(0, 2.3);
    std::vector<double> at;
    for (int i = 0; i <= 30; ++i) at.push_back(0.05 * i);
    const auto ode = radial_ode_solution(0, sol.q, sol.lambda, {0.0, 1.5}, Direction::forward, at);
    const double scale = radial_ce(sol, 0.0) / ode[0].value;
    double worst = 0.0;
    for (const OdeSample &s : ode) {
      const double ref = s.value * std::exp(s.log_scale) * scale;
      worst = std::max(worst, std::abs(radial_ce(sol, s.r) - ref) / std::max(1.0, std::abs(ref)));
    }
    return CheckLine{"ode_ce", worst <= 1e-6, "max rel err " + num(worst) + " (<= 1e-6)"};
  }));

  lines.push_back(guarded("ode_ke", [] {
    const MathieuSolution sol = char_even(0, -0.7);
    const double r0 = std::log(2.0);
    const auto ode = radial_ode_solution(0, sol.q, sol.lambda, {0.0, 4.0}, Direction::backward, {r0, 2.0});
    const double ratio_r0 = radial_ke(sol, r0) / (ode[0].value * std::exp(ode[0].log_scale));
    const double ratio_2 = radial_ke(sol, 2.0) / (ode[1].value * std::exp(ode[1].log_scale));
    const double err = std::abs(ratio_r0 / ratio_2 - 1.0);
    return CheckLine{"ode_ke", err <= 1e-5, "scale mismatch " + num(err) + " (<= 1e-5)"};
  }));

  lines.push_back(guarded("wronskian", [] {
    const MathieuSolution sol = char_even(0, -0.7);
    std::vector<double> at{0.3, 0.6, 1.0, 1.5, 2.0};
    const auto f = radial_ode_solution(0, sol.q, sol.lambda, {0.0, 4.0}, Direction::forward, at);
    const auto b = radial_ode_solution(0, sol.q, sol.lambda, {0.0, 4.0}, Direction::backward, at);
    std::vector<double> w;
    for (std::size_t i = 0; i < at.size(); ++i) {
      w.push_back((f[i].value * b[i].derivative - f[i].derivative * b[i].value) *
                  std::exp(f[i].log_scale + b[i].log_scale));
    }
    double spread = 0.0;
    for (double x : w) spread = std::max(spread, std::abs(x / w[0] - 1.0));
    return CheckLine{"wronskian", spread <= 1e-8, "relative spread " + num(spread) + " (<= 1e-8)"};
  }));

  lines.push_back(guarded("thresholds", [&] {
    CircularProblem big;
    big.radius = 4.0;
    big.N = opts.n_max;
    const double e_small = ground_energy(0.3, 0.25, 0, opts).E;
    const double e_big = circular_ground_energy(big, opts).E;
    return CheckLine{"thresholds", e_small > 0.9 && e_big < 0.30,
                     "E(0.3,0.25)=" + num(e_small) + " (> 0.9), E_circ(4)=" + num(e_big) + " (< 0.30)"};
  }));

  lines.push_back(guarded("fd_circular", [&] {
    CircularProblem cp;
    cp.radius = 1.0;
    cp.N = opts.n_max;
    const double mm = circular_ground_energy(cp, opts).E;
    const double fd = fd_circular_ground(1.0, 160, 80);
    const double rel = std::abs(fd - mm) / mm;
    return CheckLine{"fd_circular", rel <= 0.02,
                     "fd=" + num(fd) + " matcher=" + num(mm) + " rel " + num(rel) + " (<= 0.02)"};
  }));
  return lines;
}

} // namespace ellwin::cli
