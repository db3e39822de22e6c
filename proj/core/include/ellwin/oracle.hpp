#pragma once

// Independent checks of the elliptic solver: the circular window solved with
// Bessel functions, direct integration of the radial Mathieu equation, and a
// finite-volume eigensolver for the axisymmetric problem.

#include <utility>
#include <vector>

#include "ellwin/matcher.hpp"
#include "ellwin/result.hpp"
#include "ellwin/rootscan.hpp"

namespace ellwin {

struct CircularProblem {
  double radius = 1.0;
  int m = 0;
  /// Largest truncation order.
  int N = 24;
  double tol_E = 1e-9;
};

IndicatorSample circular_det_indicator(const CircularProblem &p, int N, double E);

EnergyResult circular_ground_energy(const CircularProblem &p, const SolverOptions &opts = {});
std::vector<EnergyResult> circular_bound_states(const CircularProblem &p, const SolverOptions &opts = {});

enum class Direction { forward, backward };

struct OdeSample {
  double r = 0.0;
  double value = 0.0;
  double derivative = 0.0;
  double log_scale = 0.0;
};

struct OdeOptions {
  double rtol = 1e-12;
  double min_step = 1e-14;
  int max_steps = 2'000'000;
};

/// Integrates M'' = (lambda - 2q cosh 2r) M over r_span = (r_lo, r_hi) with
/// Dormand-Prince 5(4). Forward starts at r_lo with M = 1, M' = 0 (even
/// class). Backward starts at r_hi on the decaying WKB branch. Samples are
/// returned at the requested abscissae (ascending), all within r_span.
std::vector<OdeSample> radial_ode_solution(int m, double q, double lambda, std::pair<double, double> r_span,
                                           Direction direction, const std::vector<double> &at,
                                           const OdeOptions &opts = {});

struct FdOptions {
  double margin = 6.0; // rho_max = radius + margin
  double cg_tolerance = 1e-8;
  double tolerance = 1e-10; // relative change of the Rayleigh quotient
  int max_iterations = 2000;
};

/// Lowest eigenvalue (units (pi/d)^2) of the cell-centred finite-volume
/// discretisation of the axisymmetric problem on [0, radius + margin] x [0, 1].
double fd_circular_ground(double radius, int n_rho, int n_z, const FdOptions &opts = {});

} // namespace ellwin
