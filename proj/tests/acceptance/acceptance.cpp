// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "ellwin/bounds.hpp"
#include "ellwin/matcher.hpp"
#include "ellwin/modes.hpp"
#include "ellwin/oracle.hpp"
#include "ellwin/parallel.hpp"
#include "ellwin/specfun.hpp"
#include "oracles.hpp"

using namespace ellwin;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string g(double v) { return fmt("%.6g", v); }

const int kJobs = hardware_jobs();

double circular(double radius) {
  CircularProblem p;
  p.radius = radius;
  return circular_ground_energy(p).E;
}

struct GridPoint {
  double a = 0.0, b = 0.0;
  bool found = false;
  EnergyResult result;
  std::string error;
};

// Criteria 1, 2 and 8 share this grid.
std::vector<GridPoint> solve_grid() {
  const std::vector<double> axes{0.3, 0.64, 0.98, 1.32, 1.66, 2.0};
  std::vector<GridPoint> pts;
  for (double a : axes)
    for (double b : axes)
      if (b <= a) pts.push_back({a, b});
  return parallel_map(pts, kJobs, [](GridPoint p) {
    try {
      p.result = ground_energy(p.a, p.b);
      p.found = true;
    } catch (const std::exception &e) {
      p.error = e.what();
    }
    return p;
  });
}

Verdict window(const std::vector<GridPoint> &grid) {
  int inside = 0, solved = 0;
  double lo = 1.0, hi = 0.0;
  for (const auto &p : grid) {
    if (!p.found) continue;
    ++solved;
    lo = std::min(lo, p.result.E);
    hi = std::max(hi, p.result.E);
    if (p.result.E > 0.25 && p.result.E < 1.0) ++inside;
  }
  return {solved == static_cast<int>(grid.size()) && inside == solved,
          std::to_string(inside) + "/" + std::to_string(grid.size()) + " energies in (0.25, 1), range [" + fmt("%.10f", lo) +
              ", " + fmt("%.10f", hi) + "]"};
}

Verdict existence(const std::vector<GridPoint> &grid) {
  std::string missing;
  for (const auto &p : grid)
    if (!p.found) missing += " (" + g(p.a) + "," + g(p.b) + "): " + p.error;
  const auto found = std::count_if(grid.begin(), grid.end(), [](const GridPoint &p) { return p.found; });
  return {missing.empty(), std::to_string(found) + "/" + std::to_string(grid.size()) + " points with a root" + missing};
}

Verdict bracketing(const std::vector<GridPoint> &grid) {
  int ok = 0, total = 0;
  std::string bad;
  for (const auto &p : grid) {
    if (!p.found) continue;
    ++total;
    if (theorem1_check(p.result.E, p.a, p.b).ok) {
      ++ok;
    } else {
      bad += " (" + g(p.a) + "," + g(p.b) + ")";
    }
  }
  return {total == static_cast<int>(grid.size()) && ok == total,
          std::to_string(ok) + "/" + std::to_string(grid.size()) + " bracketed" + bad};
}

Verdict thresholds() {
  const double small = ground_energy(0.3, 0.25).E;
  const double big = circular(4.0);
  return {small > 0.9 && big < 0.30, "E(0.3,0.25) = " + fmt("%.10f", small) + " (> 0.9), circular E(4) = " + g(big) +
                                         " (< 0.30)"};
}

Verdict circular_limit() {
  const std::vector<double> deltas{0.10, 0.07, 0.05};
  const auto gaps = parallel_map(deltas, kJobs, [](double d) {
    return std::abs(ground_energy(1.0, 1.0 - d).E - circular(1.0 - d / 2));
  });
  const bool pass = gaps[2] <= 0.02 && gaps[0] > gaps[1] && gaps[1] > gaps[2];
  return {pass, "gaps at delta 0.10, 0.07, 0.05: " + g(gaps[0]) + ", " + g(gaps[1]) + ", " + g(gaps[2]) +
                    " (decreasing, last <= 0.02)"};
}

Verdict small_window_fit() {
  const std::vector<double> radii{0.35, 0.40, 0.45, 0.50, 0.55};
  const auto E = parallel_map(radii, kJobs, circular);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double x = 1.0 / std::pow(radii[i], 3), y = std::log(1.0 - E[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double c = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {c >= 0.35 && c <= 0.55, "c = " + g(c) + " (in [0.35, 0.55])"};
}

// +1 convex, -1 concave, 0 mixed, from interior second differences.
int curvature_class(const std::vector<double> &E) {
  int pos = 0, neg = 0;
  for (std::size_t i = 1; i + 1 < E.size(); ++i) {
    const double d2 = E[i + 1] - 2 * E[i] + E[i - 1];
    (d2 > 0 ? pos : neg)++;
  }
  if (neg == 0) return 1;
  if (pos == 0) return -1;
  return 0;
}

Verdict concave_convex() {
  const std::vector<double> as{0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  const std::vector<double> ratios{0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<std::pair<double, double>> pts;
  for (double a : as)
    for (double t : ratios) pts.emplace_back(a, a * t);
  const auto E = parallel_map(pts, kJobs, [](const std::pair<double, double> &p) {
    return ground_energy(p.first, p.second).E;
  });
  std::vector<int> cls;
  std::string detail = "classes";
  for (std::size_t i = 0; i < as.size(); ++i) {
    cls.push_back(curvature_class({E.begin() + 5 * i, E.begin() + 5 * (i + 1)}));
    detail += " a=" + g(as[i]) + ":" + (cls.back() > 0 ? "convex" : cls.back() < 0 ? "concave" : "mixed");
  }
  double first_convex = -1.0;
  for (std::size_t i = 0; i < as.size(); ++i)
    if (cls[i] > 0) {
      first_convex = as[i];
      break;
    }
  const bool pass = cls.front() < 0 && cls.back() > 0 && first_convex >= 0.6 && first_convex <= 0.9;
  return {pass, detail + "; first convex a = " + g(first_convex) + " (in [0.6, 0.9])"};
}

Verdict plateau() {
  const std::vector<std::pair<double, double>> pts{{3.0, 0.26}, {4.0, 0.26}, {3.0, 0.5}, {4.0, 0.5}};
  const auto E = parallel_map(pts, kJobs, [](const std::pair<double, double> &p) {
    return ground_energy(p.first, p.second).E;
  });
  const double d26 = std::abs(E[0] - E[1]), d50 = std::abs(E[2] - E[3]);
  const bool pass = d26 < 0.01 && d50 < 0.01 && E[3] < E[1];
  return {pass, "b=0.26: E(3)=" + g(E[0]) + " E(4)=" + g(E[1]) + " diff " + g(d26) + "; b=0.5: E(3)=" + g(E[2]) +
                    " E(4)=" + g(E[3]) + " diff " + g(d50) + " (diffs < 0.01, level(0.5) < level(0.26))"};
}

double theta_quadrature(const MathieuSolution &s1, const MathieuSolution &s2) {
  const int n = 2048;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = 2 * std::numbers::pi * k / n;
    s += ce(s1, t) * ce(s2, t);
  }
  return s * 2 * std::numbers::pi / n;
}

Verdict special_functions() {
  double bessel = 0.0;
  for (int m = 1; m <= 12; ++m)
    for (double x = 0.5; x <= 20.0; x += 0.5)
      bessel = std::max(bessel, std::abs(specfun::bessel_j(m - 1, x) + specfun::bessel_j(m + 1, x) -
                                         2.0 * m / x * specfun::bessel_j(m, x)));
  for (int m = 0; m <= 10; ++m)
    for (double x : {0.2, 1.0, 1.7, 4.0, 12.0})
      bessel = std::max(bessel, std::abs(x * (specfun::bessel_i(m, x) * specfun::bessel_k_prime(m, x) -
                                              specfun::bessel_i_prime(m, x) * specfun::bessel_k(m, x)) +
                                         1.0));

  double ortho = 0.0;
  for (double q : {-2.0, 0.0, 2.0})
    for (int m = 0; m <= 6; ++m)
      for (int k = m; k <= 6; k += 2) {
        const double v = theta_quadrature(char_even(m, q), char_even(k, q));
        ortho = std::max(ortho, std::abs(v - (m == k ? std::numbers::pi : 0.0)));
      }

  double interior = 0.0;
  {
    const auto s = char_even(0, 2.3);
    std::vector<double> at;
    for (int i = 0; i <= 15; ++i) at.push_back(std::min(0.1 * i, 1.5));
    const auto ode = radial_ode_solution(0, s.q, s.lambda, {0.0, 1.5}, Direction::forward, at);
    const double scale = radial_ce(s, 0.0);
    for (const auto &p : ode) {
      const double ref = p.value * std::exp(p.log_scale) * scale;
      interior = std::max(interior, std::abs(radial_ce(s, p.r) - ref) / std::abs(ref));
    }
  }
  double exterior = 0.0;
  {
    const auto s = char_even(0, -0.7);
    const double r0 = std::log(2.0);
    const auto ode = radial_ode_solution(0, s.q, s.lambda, {0.2, 4.0}, Direction::backward, {0.3, r0, 1.5});
    const double scale = radial_ke(s, 1.5) / (ode[2].value * std::exp(ode[2].log_scale));
    for (int i : {0, 1}) {
      const double ref = ode[i].value * std::exp(ode[i].log_scale) * scale;
      exterior = std::max(exterior, std::abs(radial_ke(s, ode[i].r) - ref) / std::abs(ref));
    }
  }

  double zover = 0.0;
  for (int n = 0; n <= 12; ++n)
    for (int p = 0; p <= 12; ++p) {
      const double quad = oracles::integrate(
          [&](double z) {
            return 2.0 * std::cos((n + 0.5) * std::numbers::pi * z) * std::sin((p + 1.0) * std::numbers::pi * z);
          },
          0.0, 1.0);
      zover = std::max(zover, std::abs(z_overlap(n, p) - quad));
    }

  const bool pass = bessel <= 1e-9 && ortho <= 1e-9 && interior <= 1e-6 && exterior <= 1e-5 && zover <= 1e-12;
  return {pass, "bessel " + g(bessel) + " (<= 1e-9), ce orthogonality " + g(ortho) + " (<= 1e-9), Ce vs ODE " +
                    g(interior) + " (<= 1e-6), Ke vs ODE " + g(exterior) + " (<= 1e-5), z-overlap " + g(zover) +
                    " (<= 1e-12)"};
}

Verdict fd_oracle() {
  const double fd = fd_circular_ground(1.0, 160, 80);
  const double mm = circular(1.0);
  const double rel = std::abs(fd - mm) / mm;
  return {rel <= 0.02, "FD(160x80) = " + g(fd) + ", mode matching = " + g(mm) + ", rel diff " + g(rel) + " (<= 0.02)"};
}

} // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failed = 0;
  auto report = [&](int id, const char *name, const std::function<Verdict()> &f) {
    const auto t0 = clock::now();
    Verdict v;
    try {
      v = f();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("%s %2d %-24s %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), secs);
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  };

  std::vector<GridPoint> grid;
  report(1, "bound_state_window", [&] {
    grid = solve_grid();
    return window(grid);
  });
  report(2, "existence", [&] { return existence(grid); });
  report(3, "threshold_limits", thresholds);
  report(4, "circular_limit", circular_limit);
  report(5, "small_window_fit", small_window_fit);
  report(6, "concave_convex", concave_convex);
  report(7, "fixed_b_plateau", plateau);
  report(8, "theorem1_bracketing", [&] { return bracketing(grid); });
  report(9, "special_functions", special_functions);
  report(10, "fd_oracle", fd_oracle);

  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
