#include "ellwin/oracle.hpp"

#include <cmath>
#include <numbers>

#include "ellwin/errors.hpp"
#include "ellwin/modes.hpp"
#include "ellwin/specfun.hpp"

namespace ellwin {

namespace {

// x J_m'(x) / J_m(x) and its modified counterparts; scaled sequences keep
// large arguments finite.
double log_derivative_i(int m, double x) {
  if (x == 0.0) return m;
  const auto s = specfun::bessel_i_scaled_sequence(m + 1, x);
  const double d = m == 0 ? s[1] : 0.5 * (s[static_cast<std::size_t>(m) - 1] + s[static_cast<std::size_t>(m) + 1]);
  return x * d / s[static_cast<std::size_t>(m)];
}

double log_derivative_k(int m, double x) {
  const auto s = specfun::bessel_k_scaled_sequence(m + 1, x);
  const double d = m == 0 ? -s[1] : -0.5 * (s[static_cast<std::size_t>(m) - 1] + s[static_cast<std::size_t>(m) + 1]);
  return x * d / s[static_cast<std::size_t>(m)];
}

} // namespace

IndicatorSample circular_det_indicator(const CircularProblem &p, int N, double E) {
  if (!(p.radius > 0.0)) throw UsageError("circular problem: radius must be positive");
  const double pi = std::numbers::pi;
  const auto EI = transverse_energies(Region::I, N);
  const auto EII = transverse_energies(Region::II, N);

  MatchingMatrix mm;
  std::vector<double> inner(static_cast<std::size_t>(N)), outer(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) {
    const double dI = E - EI[static_cast<std::size_t>(n)];
    if (dI > 0.0) {
      const double x = pi * std::sqrt(dI) * p.radius;
      const double j = specfun::bessel_j(p.m, x);
      if (std::abs(j) < kPoleThreshold) mm.pole = true;
      inner[static_cast<std::size_t>(n)] = x * specfun::bessel_j_prime(p.m, x) / j;
    } else {
      inner[static_cast<std::size_t>(n)] = log_derivative_i(p.m, pi * std::sqrt(-dI) * p.radius);
    }
    const double dII = EII[static_cast<std::size_t>(n)] - E;
    outer[static_cast<std::size_t>(n)] = log_derivative_k(p.m, pi * std::sqrt(dII) * p.radius);
  }
  mm.F.resize(N, N);
  for (int i = 0; i < N; ++i) {
    for (int k = 0; k < N; ++k) {
      mm.F(i, k) = (inner[static_cast<std::size_t>(i)] - outer[static_cast<std::size_t>(k)]) * z_overlap(i, k) * 2.0 * pi;
    }
  }
  factor_determinant(mm);
  return {E, mm.sign, mm.log_abs_det, mm.pole};
}

namespace {

IndicatorFamily circular_family(const CircularProblem &p) {
  return [p](int N) -> Indicator { return [p, N](double E) { return circular_det_indicator(p, N, E); }; };
}

TruncationOptions circular_truncation(const CircularProblem &p, const SolverOptions &opts) {
  TruncationOptions t = opts.truncation();
  t.n_max = std::max(p.N, t.n_start);
  t.tol_E = p.tol_E;
  return t;
}

} // namespace

EnergyResult circular_ground_energy(const CircularProblem &p, const SolverOptions &opts) {
  EnergyResult r = solve_with_truncation(circular_family(p), circular_truncation(p, opts), true).front();
  r.m = p.m;
  r.circular_route = true;
  return r;
}

std::vector<EnergyResult> circular_bound_states(const CircularProblem &p, const SolverOptions &opts) {
  auto roots = solve_with_truncation(circular_family(p), circular_truncation(p, opts), false);
  for (EnergyResult &r : roots) {
    r.m = p.m;
    r.circular_route = true;
  }
  return roots;
}

} // namespace ellwin
