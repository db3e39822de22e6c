#include "ellwin/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "ellwin/bounds.hpp"
#include "ellwin/errors.hpp"
#include "ellwin/oracle.hpp"

namespace ellwin {

TruncationOptions SolverOptions::truncation() const {
  TruncationOptions t;
  t.lo = 0.25 + margin_lo;
  t.hi = 1.0 - margin_hi;
  t.scan_points = scan_points;
  t.tol_E = tol_E;
  t.n_start = n_start;
  t.n_step = n_step;
  t.n_max = n_max;
  t.tol_N = tol_N;
  return t;
}

MatchingProblem make_problem(const Ellipse &ellipse, int m, int N, const SolverOptions &opts) {
  if (N < 1) throw UsageError("make_problem: truncation must be at least 1");
  MatchingProblem p;
  p.ellipse = ellipse;
  p.m = m;
  p.N = N;
  p.window_lo = 0.25 + opts.margin_lo;
  p.window_hi = 1.0 - opts.margin_hi;
  p.scan_points = opts.scan_points;
  p.tol_E = opts.tol_E;
  return p;
}

MatchingMatrix assemble_F_unchecked(const MatchingProblem &problem, double E, MathieuCache &cache) {
  const Ellipse &el = problem.ellipse;
  const ModeContext ctx = make_mode_context(E, el.c, problem.N);
  const ModeSolutions sols = mode_solutions(ctx, problem.m, cache);
  const OverlapMatrix P = overlap_matrix(sols);

  const int N = problem.N;
  std::vector<double> lce(static_cast<std::size_t>(N)), lke(static_cast<std::size_t>(N));
  MatchingMatrix mm;
  for (int n = 0; n < N; ++n) {
    const RadialValue ce_r = radial_ce_scaled(sols.I[static_cast<std::size_t>(n)], el.r0);
    if (std::abs(ce_r.value) < kPoleThreshold) mm.pole = true;
    lce[static_cast<std::size_t>(n)] = ce_r.log_derivative();
    lke[static_cast<std::size_t>(n)] = radial_ke_scaled(sols.II[static_cast<std::size_t>(n)], el.r0).log_derivative();
  }
  mm.F.resize(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      mm.F(i, j) = (lce[static_cast<std::size_t>(i)] - lke[static_cast<std::size_t>(j)]) * P(i, j);
    }
  }
  return mm;
}

MatchingMatrix assemble_F(const MatchingProblem &problem, double E) {
  MathieuCache cache;
  MatchingMatrix mm = assemble_F_unchecked(problem, E, cache);
  if (mm.pole) {
    throw PoleAtTrialEnergy("assemble_F: Ce_m(r0, q_0) vanishes at the trial energy", E, 0);
  }
  return mm;
}

void factor_determinant(MatchingMatrix &mm) {
  const Eigen::Index n = mm.F.rows();
  Eigen::MatrixXd S = mm.F;
  mm.row_scale = Eigen::VectorXd::Ones(n);
  mm.col_scale = Eigen::VectorXd::Ones(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = S.row(i).cwiseAbs().maxCoeff();
    if (r > 0.0 && std::isfinite(r)) {
      mm.row_scale(i) = 1.0 / r;
      S.row(i) *= mm.row_scale(i);
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    const double c = S.col(j).cwiseAbs().maxCoeff();
    if (c > 0.0 && std::isfinite(c)) {
      mm.col_scale(j) = 1.0 / c;
      S.col(j) *= mm.col_scale(j);
    }
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(S);
  const Eigen::MatrixXd &U = lu.matrixLU();
  int sign = static_cast<int>(std::lround(lu.permutationP().determinant()));
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double u = U(i, i);
    if (u == 0.0) {
      mm.sign = 0;
      mm.log_abs_det = -std::numeric_limits<double>::infinity();
      return;
    }
    if (u < 0.0) sign = -sign;
    log_det += std::log(std::abs(u));
  }
  log_det -= mm.row_scale.array().log().sum() + mm.col_scale.array().log().sum();
  mm.sign = sign;
  mm.log_abs_det = log_det;
}

IndicatorSample det_indicator(const MatchingProblem &problem, double E) {
  MathieuCache cache;
  MatchingMatrix mm = assemble_F_unchecked(problem, E, cache);
  factor_determinant(mm);
  return {E, mm.sign, mm.log_abs_det, mm.pole};
}

std::vector<EnergyResult> find_bound_states(const Ellipse &ellipse, int m, const SolverOptions &opts) {
  const IndicatorFamily family = [&](int N) -> Indicator {
    const MatchingProblem p = make_problem(ellipse, m, N, opts);
    return [p](double E) { return det_indicator(p, E); };
  };
  auto roots = solve_with_truncation(family, opts.truncation(), false);
  for (EnergyResult &r : roots) {
    r.m = m;
    r.bounds_ok = theorem1_check(r.E, ellipse.a, ellipse.b).ok;
  }
  return roots;
}

EnergyResult ground_energy(double a, double b, int m, const SolverOptions &opts) {
  if (!(a > 0.0 && b > 0.0)) throw UsageError("ground_energy: axes must be positive");
  if (b > a) std::swap(a, b);
  const double e = std::sqrt((a - b) * (a + b)) / a;

  EnergyResult r;
  if (e < kNearCircularEccentricity) {
    CircularProblem cp;
    cp.radius = 0.5 * (a + b);
    cp.m = m;
    cp.N = opts.n_max;
    cp.tol_E = opts.tol_E;
    r = circular_ground_energy(cp, opts);
  } else {
    const Ellipse ellipse = ellipse_from_axes(a, b);
    const IndicatorFamily family = [&](int N) -> Indicator {
      const MatchingProblem p = make_problem(ellipse, m, N, opts);
      return [p](double E) { return det_indicator(p, E); };
    };
    r = solve_with_truncation(family, opts.truncation(), true).front();
  }
  r.m = m;
  r.bounds_ok = theorem1_check(r.E, a, b).ok;
  return r;
}

} // namespace ellwin
