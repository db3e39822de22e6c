#pragma once

// Sign-change root finding on a determinant indicator that also has poles.
// A crossing is a root when log|det| collapses towards it and a pole when it
// blows up; both flip the sign.

#include <functional>
#include <vector>

#include "ellwin/errors.hpp"
#include "ellwin/result.hpp"

namespace ellwin {

struct IndicatorSample {
  double energy = 0.0;
  int sign = 0;
  double log_magnitude = 0.0;
  bool pole = false;
};

using Indicator = std::function<IndicatorSample(double)>;
/// Indicator for truncation order N.
using IndicatorFamily = std::function<Indicator(int)>;

enum class CrossingKind { root, pole, ambiguous };

struct Crossing {
  double energy = 0.0;
  double lo = 0.0, hi = 0.0;
  CrossingKind kind = CrossingKind::ambiguous;
};

class NoRootDetected : public Error {
public:
  NoRootDetected(const std::string &what, std::vector<IndicatorSample> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<IndicatorSample> &trace() const noexcept { return trace_; }

private:
  std::vector<IndicatorSample> trace_;
};

/// Scan grid on (lo, hi): two thirds uniform up to 0.95, one third
/// logarithmic in the distance to hi's threshold 1, where roots of small
/// windows crowd.
std::vector<double> energy_grid(double lo, double hi, int points);

/// Evaluates the indicator on the grid; a sample landing on a pole is nudged
/// a few times before being kept with its pole flag.
std::vector<IndicatorSample> scan(const Indicator &f, const std::vector<double> &grid);

/// Refines the sign change between two samples of opposite sign and
/// classifies it against the log-magnitudes at the original endpoints.
Crossing refine(const Indicator &f, const IndicatorSample &lo, const IndicatorSample &hi, double tol_E);

/// All root crossings of a scan, ascending.
std::vector<Crossing> roots_from_scan(const Indicator &f, const std::vector<IndicatorSample> &samples,
                                      double tol_E);

struct TruncationOptions {
  double lo = 0.25 + 1e-6;
  double hi = 1.0 - 1e-13;
  int scan_points = 600;
  double tol_E = 1e-9;
  int n_start = 8;
  int n_step = 2;
  int n_max = 24;
  double tol_N = 1e-5;
};

/// Step size below which a root is considered converged in N. Near the
/// threshold 1 the tolerance tightens with the distance 1 - E.
double truncation_tolerance(double E, double tol_N);

/// Roots of the indicator family with N increased until they settle.
/// lowest_only tracks just the ground root; otherwise every root of the first
/// scan is tracked and the final level is rescanned.
std::vector<EnergyResult> solve_with_truncation(const IndicatorFamily &family, const TruncationOptions &opts,
                                                bool lowest_only);

} // namespace ellwin
