#pragma once

#include <utility>
#include <vector>

namespace ellwin {

struct TruncationStep {
  int N = 0;
  double E = 0.0;
};

struct EnergyResult {
  double E = 0.0;
  int N_used = 0;
  /// |E(N_used) - E(N_used - step)|; zero when only one level was solved.
  double delta_last = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  bool bounds_ok = false;
  int m = 0;
  /// delta_last met the truncation tolerance before the N cap.
  bool converged = false;
  /// Solved by the circular Bessel matcher (near-circular geometry).
  bool circular_route = false;
  std::vector<TruncationStep> trace;
};

} // namespace ellwin
