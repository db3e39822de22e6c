#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <cmath>
#include <numbers>
#include <vector>

#include "ellwin/errors.hpp"
#include "ellwin/oracle.hpp"

namespace ellwin {

// Cells are centred in rho, nodes sit on z = j h_z. The z = 0 row exists only
// under the window (Neumann, half cells); z = 1, z = 0 outside the window and
// rho = rho_max are Dirichlet.
double fd_circular_ground(double radius, int n_rho, int n_z, const FdOptions &opts) {
  if (!(radius >= 0.0)) throw UsageError("fd_circular_ground: radius must be non-negative");
  if (n_rho < 4 || n_z < 4) throw UsageError("fd_circular_ground: grid too coarse");

  // The window edge sits on a cell face so every grid resolves the same radius.
  const int window_cells = static_cast<int>(std::floor(n_rho * radius / (radius + opts.margin)));
  const double hr = window_cells > 0 ? radius / window_cells : opts.margin / n_rho;
  const double rho_max = n_rho * hr;
  const double hz = 1.0 / n_z;

  // Unknown numbering; -1 marks Dirichlet nodes.
  std::vector<int> index(static_cast<std::size_t>(n_rho * n_z), -1);
  const auto at = [&](int i, int j) -> int & { return index[static_cast<std::size_t>(j * n_rho + i)]; };
  int count = 0;
  for (int j = 0; j < n_z; ++j) {
    for (int i = 0; i < n_rho; ++i) {
      if (j == 0 && i >= window_cells) continue;
      at(i, j) = count++;
    }
  }
  if (count == 0) throw UsageError("fd_circular_ground: no unknowns");

  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd mass(count);
  for (int j = 0; j < n_z; ++j) {
    const double wz = j == 0 ? 0.5 * hz : hz;
    for (int i = 0; i < n_rho; ++i) {
      const int k = at(i, j);
      if (k < 0) continue;
      const double rho = (i + 0.5) * hr;
      mass(k) = rho * hr * wz;
      double diag = 0.0;
      // radial faces
      if (i + 1 < n_rho) {
        const double g = (i + 1) * hr * wz / hr;
        diag += g;
        const int right = at(i + 1, j);
        if (right >= 0) trip.emplace_back(k, right, -g);
      } else {
        diag += rho_max * wz / (0.5 * hr);
      }
      if (i > 0) {
        const double g = i * hr * wz / hr;
        diag += g;
        trip.emplace_back(k, at(i - 1, j), -g); // inner neighbours are always unknowns
      }
      // vertical faces
      const double gz = rho * hr / hz;
      diag += gz; // towards j + 1 (unknown or the Dirichlet top)
      if (j + 1 < n_z) trip.emplace_back(k, at(i, j + 1), -gz);
      if (j > 0) {
        diag += gz;
        const int below = at(i, j - 1);
        if (below >= 0) trip.emplace_back(k, below, -gz);
      }
      trip.emplace_back(k, k, diag);
    }
  }
  Eigen::SparseMatrix<double> A(count, count);
  A.setFromTriplets(trip.begin(), trip.end());

  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                           Eigen::IncompleteCholesky<double>>
      cg;
  cg.setTolerance(opts.cg_tolerance);
  cg.compute(A);
  if (cg.info() != Eigen::Success) throw IterationFailure("fd_circular_ground: preconditioner failed", {});

  Eigen::VectorXd u = Eigen::VectorXd::Ones(count);
  double mu = 0.0;
  std::vector<double> history;
  for (int it = 0; it < opts.max_iterations; ++it) {
    const Eigen::VectorXd rhs = mass.cwiseProduct(u);
    Eigen::VectorXd v = cg.solveWithGuess(rhs, u / std::max(mu, 1.0));
    const double mnorm = std::sqrt(v.dot(mass.cwiseProduct(v)));
    v /= mnorm;
    const double mu_new = v.dot(A * v);
    const double change = std::abs(mu_new - mu) / mu_new;
    history.push_back(change);
    u = std::move(v);
    mu = mu_new;
    if (it > 2 && change < opts.tolerance) return mu / (std::numbers::pi * std::numbers::pi);
  }
  throw IterationFailure("fd_circular_ground: inverse iteration did not converge", std::move(history));
}

} // namespace ellwin
