#pragma once

// Mode matching across the elliptic cylinder r = r0 bounding the window.
// Bound states are the energies in (1/4, 1) where the matching matrix F is
// singular.

#include <Eigen/Dense>
#include <vector>

#include "ellwin/geometry.hpp"
#include "ellwin/modes.hpp"
#include "ellwin/result.hpp"
#include "ellwin/rootscan.hpp"

namespace ellwin {

struct SolverOptions {
  int n_start = 8;
  int n_step = 2;
  int n_max = 24;
  int scan_points = 600;
  double tol_E = 1e-9;
  double tol_N = 1e-5;
  /// Distance of the scan window from the lower threshold 1/4.
  double margin_lo = 1e-6;
  /// Distance of the scan window from the upper threshold 1. Roots of small
  /// windows sit within 1e-10 of it, hence the tight default.
  double margin_hi = 1e-13;

  TruncationOptions truncation() const;
};

struct MatchingProblem {
  Ellipse ellipse;
  int m = 0;
  int N = 8;
  double window_lo = 0.25 + 1e-6;
  double window_hi = 1.0 - 1e-13;
  int scan_points = 600;
  double tol_E = 1e-9;
};

MatchingProblem make_problem(const Ellipse &ellipse, int m, int N, const SolverOptions &opts = {});

struct MatchingMatrix {
  Eigen::MatrixXd F;
  Eigen::VectorXd row_scale; // F_equilibrated = diag(row) F diag(col)
  Eigen::VectorXd col_scale;
  double log_abs_det = 0.0;
  int sign = 0;
  bool pole = false;
};

inline constexpr double kPoleThreshold = 1e-13;

/// Throws PoleAtTrialEnergy when some Ce_m(r0, q_n^I) vanishes.
MatchingMatrix assemble_F(const MatchingProblem &problem, double E);

/// Same as assemble_F but reports poles through the flag instead of throwing.
MatchingMatrix assemble_F_unchecked(const MatchingProblem &problem, double E, MathieuCache &cache);

/// Equilibrates F in place and fills sign and log|det| via pivoted LU.
void factor_determinant(MatchingMatrix &mm);

IndicatorSample det_indicator(const MatchingProblem &problem, double E);

std::vector<EnergyResult> find_bound_states(const Ellipse &ellipse, int m, const SolverOptions &opts = {});

/// Lowest bound state. b > a is solved as the rotated window; eccentricity
/// below kNearCircularEccentricity goes to the circular solver at radius (a+b)/2.
EnergyResult ground_energy(double a, double b, int m = 0, const SolverOptions &opts = {});

} // namespace ellwin
