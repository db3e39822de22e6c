#pragma once

// Transverse (z) mode families of the two regions and their coupling.
//
// Region I (under the window, Neumann at z = 0):  Z_n = sqrt2 cos((n + 1/2) pi z)
// Region II (Dirichlet at z = 0):                  Z_n = sqrt2 sin((n + 1)  pi z)
// Energies are in units of (pi/d)^2 with d = 1.

#include <map>
#include <utility>
#include <vector>

#include "ellwin/mathieu.hpp"

namespace ellwin {

enum class Region { I, II };

std::vector<double> transverse_energies(Region region, int count);

/// Mathieu parameter of a mode with transverse energy En at total energy E.
double q_param(double E, double En, double c);

/// integral_0^1 Z_n^I(z) Z_p^II(z) dz.
double z_overlap(int n, int p);

/// integral_0^{2pi} ce_m(theta, q1) ce_m(theta, q2) dtheta, same m.
double theta_overlap(const MathieuSolution &first, const MathieuSolution &second);

struct ModeContext {
  double E = 0.0;
  double c = 0.0;
  int nmodes = 0;
  std::vector<double> EI, EII;
  std::vector<double> qI, qII;
};

ModeContext make_mode_context(double E, double c, int nmodes);

/// Memoises char_even by (m, q rounded to 1e-14). Not thread-safe; use one per
/// evaluation thread.
class MathieuCache {
public:
  const MathieuSolution &get(int m, double q);
  std::size_t size() const noexcept { return entries_.size(); }

private:
  std::map<std::pair<int, double>, MathieuSolution> entries_;
};

struct ModeSolutions {
  int m = 0;
  std::vector<MathieuSolution> I, II;
};

ModeSolutions mode_solutions(const ModeContext &ctx, int m, MathieuCache &cache);

struct OverlapMatrix {
  int m = 0;
  int n = 0;
  std::vector<double> entries; // row-major, row = region-I index

  double operator()(int row, int col) const { return entries[static_cast<std::size_t>(row * n + col)]; }
};

OverlapMatrix overlap_matrix(const ModeSolutions &sols);
OverlapMatrix overlap_matrix(const ModeContext &ctx, int m);

} // namespace ellwin
