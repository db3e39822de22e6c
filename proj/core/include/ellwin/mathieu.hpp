#pragma once

// Even (cosine-elliptic) Mathieu functions for real q of either sign.
//
//   angular:  N'' + (lambda - 2q cos 2theta) N = 0   -> ce_m(theta, q)
//   radial:   M'' - (lambda - 2q cosh 2r)   M = 0   -> Ce_m(r, q), Ke_m(r, q)
//
// ce_m is normalised to  integral_0^{2pi} ce_m^2 = pi  with ce_m(0, q) > 0,
// which fixes the sign continuously in q (ce_m(0, q) never vanishes).

#include <cmath>
#include <vector>

namespace ellwin {

inline constexpr int kMaxMathieuOrder = 20;
inline constexpr double kMaxMathieuParameter = 1e5;

struct MathieuSolution {
  int m = 0;
  double q = 0.0;
  double lambda = 0.0;
  /// A_{2k} (m even) or A_{2k+1} (m odd), k = 0..coeffs.size()-1.
  std::vector<double> coeffs;
  /// Size of the recurrence matrix the eigenpair was taken from.
  int dimension = 0;

  int parity() const noexcept { return m % 2; }
  int harmonic(std::size_t k) const noexcept { return static_cast<int>(2 * k) + parity(); }
};

/// A radial function value and its r-derivative sharing one exponent:
/// true value = value * exp(log_scale), same for the derivative.
struct RadialValue {
  double value = 0.0;
  double derivative = 0.0;
  double log_scale = 0.0;

  double log_derivative() const noexcept { return derivative / value; }
  double unscaled_value() const { return value * std::exp(log_scale); }
  double unscaled_derivative() const { return derivative * std::exp(log_scale); }
};

/// Which Bessel expansion evaluates Ke. `automatic` picks the product series
/// while h e^{-r} <= kKeProductLimit and the cosh-argument series beyond.
enum class KeSeries { automatic, product, cosh_argument };
inline constexpr double kKeProductLimit = 3.0;

/// Characteristic value and Fourier coefficients of ce_m(., q).
/// Throws UnsupportedOrder (m > 20), UsageError (|q| too large) and
/// TruncationFailure when lambda does not settle as the matrix grows.
MathieuSolution char_even(int m, double q);

double ce(const MathieuSolution &sol, double theta);
double ce_dtheta(const MathieuSolution &sol, double theta);

/// Radial function of the first kind, regular and even in r.
RadialValue radial_ce_scaled(const MathieuSolution &sol, double r);
double radial_ce(const MathieuSolution &sol, double r);
double radial_ce_dr(const MathieuSolution &sol, double r);

/// Decaying radial solution for q < 0; |q| is taken from sol.
/// Normalised so that Ke ~ ce_m(0,q) sqrt(pi / (2 w)) e^{-w}, w = 2|q|^{1/2} cosh r.
RadialValue radial_ke_scaled(const MathieuSolution &sol, double r,
                             KeSeries series = KeSeries::automatic);
double radial_ke(const MathieuSolution &sol, double r);
double radial_ke_dr(const MathieuSolution &sol, double r);

} // namespace ellwin
