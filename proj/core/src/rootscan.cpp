#include "ellwin/rootscan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

namespace ellwin {

namespace {

constexpr double kGridKnee = 0.95;

bool flips(const IndicatorSample &a, const IndicatorSample &b) {
  return !a.pole && !b.pole && a.sign != 0 && b.sign != 0 && a.sign != b.sign;
}

std::optional<Crossing> track_root(const Indicator &f, double previous, const TruncationOptions &opts) {
  const IndicatorSample centre = f(previous);
  if (centre.pole) return std::nullopt;
  if (centre.sign == 0) return Crossing{previous, previous, previous, CrossingKind::root};

  double d = std::min({1e-3, 0.05 * (1.0 - previous), 0.05 * (previous - opts.lo)});
  d = std::max(d, 4.0 * std::numeric_limits<double>::epsilon());
  for (int k = 0; k < 14; ++k) {
    const double left = std::max(opts.lo, previous - d);
    const double right = std::min(opts.hi, previous + d);
    std::optional<Crossing> best;
    const auto consider = [&](const IndicatorSample &a, const IndicatorSample &b) {
      if (!flips(a, b)) return;
      const Crossing c = refine(f, a, b, opts.tol_E);
      if (c.kind != CrossingKind::root) return;
      if (!best || std::abs(c.energy - previous) < std::abs(best->energy - previous)) best = c;
    };
    if (left < previous) consider(f(left), centre);
    if (right > previous) consider(centre, f(right));
    if (best) return best;
    if (left <= opts.lo && right >= opts.hi) break;
    d *= 4.0;
  }
  return std::nullopt;
}

struct Track {
  Crossing last;
  std::vector<TruncationStep> trace;
  double delta = 0.0;
  bool converged = false;
};

std::vector<Crossing> full_scan(const Indicator &f, const std::vector<double> &grid, double tol_E,
                                std::vector<IndicatorSample> *trace = nullptr) {
  auto samples = scan(f, grid);
  auto roots = roots_from_scan(f, samples, tol_E);
  if (trace) *trace = std::move(samples);
  return roots;
}

} // namespace

std::vector<double> energy_grid(double lo, double hi, int points) {
  if (points < 4 || !(lo < hi)) throw UsageError("energy_grid: need lo < hi and at least 4 points");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  if (hi <= kGridKnee || lo >= kGridKnee) {
    for (int i = 0; i < points; ++i) grid.push_back(lo + (hi - lo) * i / (points - 1));
    return grid;
  }
  const int n_uniform = std::max(2, 2 * points / 3);
  const int n_log = points - n_uniform;
  for (int i = 0; i < n_uniform; ++i) grid.push_back(lo + (kGridKnee - lo) * i / n_uniform);
  const double top = std::log(1.0 - kGridKnee);
  const double bottom = std::log(1.0 - hi);
  for (int i = 0; i < n_log; ++i) {
    const double t = n_log == 1 ? 1.0 : static_cast<double>(i) / (n_log - 1);
    grid.push_back(1.0 - std::exp(top + (bottom - top) * t));
  }
  grid.back() = hi;
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<IndicatorSample> scan(const Indicator &f, const std::vector<double> &grid) {
  std::vector<IndicatorSample> out;
  out.reserve(grid.size());
  for (double E : grid) {
    IndicatorSample s = f(E);
    for (int k = 1; s.pole && k <= 3; ++k) s = f(E * (1.0 + k * 1e-9 * (k % 2 ? 1.0 : -1.0)));
    out.push_back(s);
  }
  return out;
}

Crossing refine(const Indicator &f, const IndicatorSample &lo, const IndicatorSample &hi, double tol_E) {
  IndicatorSample a = lo, b = hi;
  const double endpoint_max = std::max(lo.log_magnitude, hi.log_magnitude);
  while (true) {
    const double mid = 0.5 * (a.energy + b.energy);
    const double tol = std::min(tol_E, 1e-6 * std::abs(1.0 - mid));
    if (b.energy - a.energy <= tol || mid <= a.energy || mid >= b.energy) break;
    const IndicatorSample s = f(mid);
    if (s.pole) return {mid, a.energy, b.energy, CrossingKind::pole};
    if (s.sign == 0) return {mid, mid, mid, CrossingKind::root};
    (s.sign == a.sign ? a : b) = s;
  }
  Crossing c{0.5 * (a.energy + b.energy), a.energy, b.energy, CrossingKind::ambiguous};
  const double fmin = std::min(a.log_magnitude, b.log_magnitude);
  const double fmax = std::max(a.log_magnitude, b.log_magnitude);
  if (fmin > endpoint_max + 2.0) {
    c.kind = CrossingKind::pole;
  } else if (fmax < endpoint_max) {
    c.kind = CrossingKind::root;
  }
  return c;
}

std::vector<Crossing> roots_from_scan(const Indicator &f, const std::vector<IndicatorSample> &samples,
                                      double tol_E) {
  std::vector<Crossing> roots;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const IndicatorSample &s = samples[i];
    if (!s.pole && s.sign == 0) {
      roots.push_back({s.energy, s.energy, s.energy, CrossingKind::root});
      continue;
    }
    if (i + 1 < samples.size() && flips(s, samples[i + 1])) {
      const Crossing c = refine(f, s, samples[i + 1], tol_E);
      if (c.kind == CrossingKind::root) roots.push_back(c);
    }
  }
  return roots;
}

double truncation_tolerance(double E, double tol_N) { return tol_N * std::min(1.0, 10.0 * (1.0 - E)); }

std::vector<EnergyResult> solve_with_truncation(const IndicatorFamily &family, const TruncationOptions &opts,
                                                bool lowest_only) {
  if (opts.n_start < 1 || opts.n_step < 1 || opts.n_max < opts.n_start) {
    throw UsageError("solve_with_truncation: invalid truncation schedule");
  }
  const auto grid = energy_grid(opts.lo, opts.hi, opts.scan_points);

  int N = opts.n_start;
  std::vector<IndicatorSample> trace;
  Indicator f = family(N);
  std::vector<Crossing> first = full_scan(f, grid, opts.tol_E, &trace);
  while (first.empty() && N + opts.n_step <= opts.n_max) {
    N += opts.n_step;
    f = family(N);
    first = full_scan(f, grid, opts.tol_E, &trace);
  }
  if (first.empty()) {
    char edge[32];
    std::snprintf(edge, sizeof edge, "%.3g", 1.0 - opts.hi);
    throw NoRootDetected("no root of the matching determinant in the bound-state window (N = " +
                             std::to_string(N) + "); for very small windows the bound state can lie closer to 1 "
                             "than the scan edge 1 - " + edge,
                         std::move(trace));
  }
  if (lowest_only) first.resize(1);

  std::vector<Track> tracks;
  for (const Crossing &c : first) tracks.push_back({c, {{N, c.energy}}, 0.0, false});

  const auto all_converged = [&] {
    return std::all_of(tracks.begin(), tracks.end(), [](const Track &t) { return t.converged; });
  };

  while (!all_converged() && N + opts.n_step <= opts.n_max) {
    N += opts.n_step;
    f = family(N);
    std::vector<std::optional<Crossing>> moved;
    bool lost = false;
    for (const Track &t : tracks) {
      moved.push_back(track_root(f, t.last.energy, opts));
      if (!moved.back()) {
        lost = true;
        break;
      }
    }
    if (lost) {
      const auto roots = full_scan(f, grid, opts.tol_E);
      moved.assign(tracks.size(), std::nullopt);
      for (std::size_t i = 0; i < tracks.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const Crossing &c : roots) {
          const double d = std::abs(c.energy - tracks[i].last.energy);
          if (d < best) {
            best = d;
            moved[i] = c;
          }
        }
      }
    }
    for (std::size_t i = 0; i < tracks.size(); ++i) {
      Track &t = tracks[i];
      if (!moved[i]) continue; // vanished: keep the last level's value
      t.delta = std::abs(moved[i]->energy - t.last.energy);
      t.converged = t.delta < truncation_tolerance(moved[i]->energy, opts.tol_N);
      t.last = *moved[i];
      t.trace.push_back({N, t.last.energy});
    }
  }

  std::vector<Crossing> final_roots;
  if (lowest_only) {
    final_roots.push_back(tracks.front().last);
  } else {
    final_roots = full_scan(f, grid, opts.tol_E);
    if (final_roots.empty()) {
      for (const Track &t : tracks) final_roots.push_back(t.last);
    }
  }

  std::vector<EnergyResult> out;
  for (const Crossing &c : final_roots) {
    EnergyResult r;
    r.E = c.energy;
    r.N_used = N;
    r.bracket = {c.lo, c.hi};
    const Track *match = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (const Track &t : tracks) {
      const double d = std::abs(t.last.energy - c.energy);
      if (d < best) {
        best = d;
        match = &t;
      }
    }
    if (match && best <= std::max(10.0 * opts.tol_E, 1e-3 * (1.0 - c.energy)) && match->trace.back().N == N) {
      r.delta_last = match->delta;
      r.converged = match->converged;
      r.trace = match->trace;
      r.trace.back().E = c.energy;
    } else {
      r.trace = {{N, c.energy}};
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const EnergyResult &x, const EnergyResult &y) { return x.E < y.E; });
  return out;
}

} // namespace ellwin
