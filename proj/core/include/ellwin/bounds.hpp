#pragma once

// Analytic thresholds of the layer with a Neumann window and the two-sided
// Bessel-zero bracketing of its eigenvalues. Units (pi/d)^2, d = 1.

#include <utility>

namespace ellwin {

inline constexpr int kBoundsIndexCap = 10;

/// Bottom of the essential spectrum (the first Dirichlet transverse energy).
double essential_spectrum_bottom() noexcept;
/// Bottom of the spectrum of the layer with Neumann on the whole plane z = 0.
double neumann_floor() noexcept;
/// Open interval where bound states can live.
std::pair<double, double> discrete_window() noexcept;

/// l^2 + (x_{|m| n} / (pi xi))^2 for the comparison cylinder of radius xi.
double cylinder_eigenvalue(int m, int n, int l, double xi);

struct SpectralBounds {
  double lower = 0.0;
  double upper = 0.0;
  /// (m', n'); (-1, -1) when the lower bound is the Neumann floor.
  std::pair<int, int> index_pair_lower{-1, -1};
  std::pair<int, int> index_pair_upper{-1, -1};
};

struct Theorem1Report {
  bool ok = false;
  /// Both bounds realised by Bessel-zero pairs, without the floor fallback.
  bool printed_pair_ok = false;
  SpectralBounds bounds;
};

/// Brackets E (the j-th eigenvalue, j >= 1) between cylinder eigenvalues of
/// radii a (lower) and b (upper) over index pairs m, n <= 10; the reported
/// bounds are clipped to the discrete window. The first eigenvalue has no lower
/// cylinder partner, so its lower bound is the Neumann floor.
Theorem1Report theorem1_check(double E, double a, double b, int j = 1);

} // namespace ellwin
