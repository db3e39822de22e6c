#include "ellwin/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ellwin/errors.hpp"
#include "ellwin/specfun.hpp"

namespace ellwin {

double essential_spectrum_bottom() noexcept { return 1.0; }

double neumann_floor() noexcept { return 0.25; }

std::pair<double, double> discrete_window() noexcept { return {neumann_floor(), essential_spectrum_bottom()}; }

double cylinder_eigenvalue(int m, int n, int l, double xi) {
  if (!(xi > 0.0)) throw UsageError("cylinder_eigenvalue: radius must be positive");
  if (n < 1) throw UsageError("cylinder_eigenvalue: zero index starts at 1");
  const double x = specfun::bessel_j_zero(std::abs(m), n).value / (std::numbers::pi * xi);
  return static_cast<double>(l) * l + x * x;
}

Theorem1Report theorem1_check(double E, double a, double b, int j) {
  if (!(a > 0.0 && b > 0.0)) throw UsageError("theorem1_check: axes must be positive");
  if (b > a) std::swap(a, b);
  if (j < 1) throw UsageError("theorem1_check: eigenvalue index starts at 1");

  const auto [floor, top] = discrete_window();
  Theorem1Report report;
  SpectralBounds &bd = report.bounds;
  bd.lower = -std::numeric_limits<double>::infinity();
  bd.upper = std::numeric_limits<double>::infinity();

  for (int m = 0; m <= kBoundsIndexCap; ++m) {
    for (int n = 1; n <= kBoundsIndexCap; ++n) {
      const double lo = cylinder_eigenvalue(m, n, 0, a);
      const double hi = cylinder_eigenvalue(m, n, 0, b);
      if (lo <= E && lo > bd.lower) {
        bd.lower = lo;
        bd.index_pair_lower = {m, n};
      }
      if (hi >= E && hi < bd.upper) {
        bd.upper = hi;
        bd.index_pair_upper = {m, n};
      }
    }
  }
  const bool printed_lower = std::isfinite(bd.lower);
  const bool printed_upper = std::isfinite(bd.upper);
  report.printed_pair_ok = printed_lower && printed_upper && E > floor && E < top;

  if (j == 1) {
    bd.lower = floor;
    bd.index_pair_lower = {-1, -1};
  }
  report.ok = std::isfinite(bd.lower) && printed_upper && E > floor && E < top;
  bd.lower = std::max(bd.lower, floor);
  bd.upper = std::min(bd.upper, top);
  return report;
}

} // namespace ellwin
