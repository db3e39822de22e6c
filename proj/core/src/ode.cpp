#include <algorithm>
#include <array>
#include <cmath>

#include "ellwin/errors.hpp"
#include "ellwin/oracle.hpp"

namespace ellwin {

namespace {

using State = std::array<double, 2>;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695, e4 = b4 - 393.0 / 640,
                 e5 = b5 + 92097.0 / 339200, e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

struct Rhs {
  double lambda, q;
  State operator()(double r, const State &y) const {
    return {y[1], (lambda - 2.0 * q * std::cosh(2.0 * r)) * y[0]};
  }
};

State axpy(const State &y, double h, std::initializer_list<std::pair<double, const State *>> terms) {
  State out = y;
  for (const auto &[w, k] : terms) {
    out[0] += h * w * (*k)[0];
    out[1] += h * w * (*k)[1];
  }
  return out;
}

double norm(const State &y) { return std::max(std::abs(y[0]), std::abs(y[1])); }

} // namespace

std::vector<OdeSample> radial_ode_solution(int m, double q, double lambda, std::pair<double, double> r_span,
                                           Direction direction, const std::vector<double> &at,
                                           const OdeOptions &opts) {
  if (m < 0) throw UsageError("radial_ode_solution: negative order");
  const auto [r_lo, r_hi] = r_span;
  if (!(r_lo < r_hi)) throw UsageError("radial_ode_solution: empty interval");
  for (double r : at) {
    if (r < r_lo || r > r_hi) throw UsageError("radial_ode_solution: sample outside the interval");
  }
  if (!std::is_sorted(at.begin(), at.end())) throw UsageError("radial_ode_solution: samples must ascend");

  const Rhs f{lambda, q};
  const bool fwd = direction == Direction::forward;
  double t = fwd ? r_lo : r_hi;
  const double t_end = fwd ? r_hi : r_lo;
  const double sgn = fwd ? 1.0 : -1.0;

  State y;
  if (fwd) {
    y = {1.0, 0.0};
  } else {
    const double P = lambda - 2.0 * q * std::cosh(2.0 * r_hi);
    if (!(P > 0.0)) throw DomainError("radial_ode_solution: backward start is not in the evanescent zone");
    const double dP = -4.0 * q * std::sinh(2.0 * r_hi);
    y = {1.0, -std::sqrt(P) - dP / (4.0 * P)};
  }
  double log_scale = 0.0;

  std::vector<OdeSample> out(at.size());
  // Output indices in the order they are reached.
  std::vector<std::size_t> order(at.size());
  for (std::size_t i = 0; i < at.size(); ++i) order[i] = fwd ? i : at.size() - 1 - i;
  std::size_t next = 0;
  const auto record = [&] {
    while (next < order.size() && at[order[next]] == t) {
      out[order[next]] = {t, y[0], y[1], log_scale};
      ++next;
    }
  };
  record();

  const double span = r_hi - r_lo;
  double h = std::min(1e-3, 0.01 * span);
  int steps = 0;
  while (sgn * (t_end - t) > 0.0) {
    if (++steps > opts.max_steps) throw IntegrationFailure("radial_ode_solution: step budget exhausted", t, h);
    double target = t_end;
    if (next < order.size()) target = at[order[next]];
    double step = std::min(h, sgn * (target - t));
    const State k1 = f(t, y);
    const double hs = sgn * step;
    const State k2 = f(t + c2 * hs, axpy(y, hs, {{a21, &k1}}));
    const State k3 = f(t + c3 * hs, axpy(y, hs, {{a31, &k1}, {a32, &k2}}));
    const State k4 = f(t + c4 * hs, axpy(y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = f(t + c5 * hs, axpy(y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = f(t + hs, axpy(y, hs, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y_new = axpy(y, hs, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = f(t + hs, y_new);
    const State err = axpy({0.0, 0.0}, hs, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});
    const double scale = opts.rtol * std::max(norm(y), norm(y_new));
    const double ratio = norm(err) / scale;
    if (ratio <= 1.0) {
      t = (step == sgn * (target - t)) ? target : t + hs;
      y = y_new;
      const double mag = norm(y);
      if (mag > 1e100 || mag < 1e-100) {
        y[0] /= mag;
        y[1] /= mag;
        log_scale += std::log(mag);
      }
      record();
    }
    const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
    h = step * factor;
    if (h < opts.min_step * std::max(1.0, std::abs(t))) {
      throw IntegrationFailure("radial_ode_solution: step size underflow", t, h);
    }
  }
  record();
  return out;
}

} // namespace ellwin
