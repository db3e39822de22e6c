#include "ellwin/mathieu.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ellwin/errors.hpp"
#include "ellwin/specfun.hpp"
#include "ellwin/tridiagonal.hpp"

namespace ellwin {

namespace {

constexpr int kMaxDimension = 1 << 15;
constexpr double kRescale = 1e200;

// Symmetrised recurrence: for even m the first unknown is sqrt(2) A_0 so that
// the matrix is symmetric and unit eigenvectors carry the pi-normalisation.
SymmetricTridiagonal recurrence_matrix(int parity, double q, int dim) {
  SymmetricTridiagonal t;
  t.diag.resize(static_cast<std::size_t>(dim));
  t.off.assign(static_cast<std::size_t>(dim) - 1, q);
  for (int k = 0; k < dim; ++k) {
    const double nu = 2.0 * k + parity;
    t.diag[static_cast<std::size_t>(k)] = nu * nu;
  }
  if (parity == 0) {
    if (dim > 1) t.off[0] = std::numbers::sqrt2 * q;
  } else {
    t.diag[0] += q;
  }
  return t;
}

double coefficient_sum(const MathieuSolution &sol) {
  double s = 0.0;
  for (double a : sol.coeffs) s += a;
  return s;
}

// Product-series bookkeeping shared by Ce and Ke: derivative of a Bessel-type
// sequence value at index l from its neighbours (scaled or not).
inline double j_deriv(const std::vector<double> &j, std::size_t l) {
  return l == 0 ? -j[1] : 0.5 * (j[l - 1] - j[l + 1]);
}
inline double i_deriv(const std::vector<double> &i, std::size_t l) {
  return l == 0 ? i[1] : 0.5 * (i[l - 1] + i[l + 1]);
}
inline double k_deriv(const std::vector<double> &k, std::size_t l) {
  return l == 0 ? -k[1] : -0.5 * (k[l - 1] + k[l + 1]);
}

RadialValue ke_product(const MathieuSolution &sol, double r) {
  const double h = std::sqrt(-sol.q);
  const double v1 = h * std::exp(-r);
  const double v2 = h * std::exp(r);
  std::size_t n = sol.coeffs.size();
  const auto iv = specfun::bessel_i_scaled_sequence(static_cast<int>(n) + 1, v1);
  const auto kv = specfun::bessel_k_scaled_sequence(static_cast<int>(n) + 1, v2);
  // K_l grows factorially at small argument; drop orders where it overflowed.
  while (n > 0 && !std::isfinite(kv[n + 1])) --n;

  double sum = 0.0, dsum = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    const double a = sign * sol.coeffs[l];
    if (sol.parity() == 0) {
      sum += a * iv[l] * kv[l];
      dsum += a * (-v1 * i_deriv(iv, l) * kv[l] + v2 * iv[l] * k_deriv(kv, l));
    } else {
      sum += a * (iv[l] * kv[l + 1] - iv[l + 1] * kv[l]);
      dsum += a * (-v1 * i_deriv(iv, l) * kv[l + 1] + v2 * iv[l] * k_deriv(kv, l + 1) +
                   v1 * i_deriv(iv, l + 1) * kv[l] - v2 * iv[l + 1] * k_deriv(kv, l));
    }
  }
  const double norm = coefficient_sum(sol) / sol.coeffs.front();
  return {norm * sum, norm * dsum, v1 - v2};
}

// Ke = sum_l A_l K_{2l+p}(w), w = 2h cosh r. Coefficients past the eigenvector
// peak come from the minimal-solution continued fraction, so that terms are
// formed as ratios and never from separately under/overflowing factors.
RadialValue ke_cosh_argument(const MathieuSolution &sol, double r) {
  const double q = sol.q;
  const double h = std::sqrt(-q);
  const double w = 2.0 * h * std::cosh(r);
  const double dw = 2.0 * h * std::sinh(r);
  const int par = sol.parity();
  const auto &A = sol.coeffs;

  std::size_t peak = 0;
  for (std::size_t k = 1; k < A.size(); ++k) {
    if (std::abs(A[k]) > std::abs(A[peak])) peak = k;
  }
  std::size_t split = std::min(A.size() - 1, peak + 3);
  if (par == 0) split = std::max<std::size_t>(split, 1);
  split = std::min(split, A.size() - 1);

  const auto [k0, k1] = specfun::bessel_k01_scaled(w);
  const double log_cosh2 = 2.0 * std::log(std::cosh(r));
  std::size_t limit = split + 40 + static_cast<std::size_t>(std::ceil(w)) +
                      static_cast<std::size_t>(std::ceil(45.0 / std::max(log_cosh2, 1e-12)));
  limit = std::min<std::size_t>(limit, 4'000'000);

  for (int attempt = 0; attempt < 4; ++attempt) {
    // rho[l] = A_l / A_{l-1} for l > split.
    std::vector<double> rho(limit + 2, 0.0);
    {
      double next = 0.0;
      for (std::size_t l = limit + 1; l > split; --l) {
        const double nu = 2.0 * static_cast<double>(l) + par;
        next = q / (sol.lambda - nu * nu - q * next);
        rho[l] = next;
      }
    }

    double kap = k1 / k0; // K_{nu+1} / K_nu at nu = 0
    int nu = 0;
    auto advance = [&] {
      kap = 1.0 / kap + 2.0 * (nu + 1) / w;
      ++nu;
    };
    if (par == 1) advance();

    double sum = 0.0, dsum = 0.0, log_acc = 0.0;
    double rel_k = 1.0; // K_nu / K_par
    double term = 0.0, prev_abs = 0.0, ratio_k = 1.0;
    bool converged = false;
    for (std::size_t l = 0; l <= limit; ++l) {
      if (l <= split) {
        term = A[l] * rel_k;
      } else {
        term *= rho[l] * ratio_k;
      }
      sum += term;
      dsum += term * dw * (nu / w - kap);

      const double abs_term = std::abs(term);
      if (l > split && abs_term < prev_abs && abs_term > 0.0) {
        const double ratio = abs_term / prev_abs;
        if (ratio < 1.0 && abs_term * ratio / (1.0 - ratio) < 1e-17 * std::abs(sum)) {
          converged = true;
          break;
        }
      }
      if (l > split && abs_term == 0.0) {
        converged = true;
        break;
      }
      prev_abs = abs_term;

      const double r1 = kap;
      advance();
      const double r2 = kap;
      advance();
      ratio_k = r1 * r2;
      if (l < split) rel_k *= ratio_k;

      if (std::abs(sum) > kRescale || abs_term > kRescale) {
        sum /= kRescale;
        dsum /= kRescale;
        term /= kRescale;
        prev_abs /= kRescale;
        rel_k /= kRescale;
        log_acc += std::log(kRescale);
      }
    }
    if (converged) {
      const double kpar = par == 0 ? k0 : k1;
      return {sum, dsum, -w + std::log(kpar) + log_acc};
    }
    limit *= 2;
  }
  throw Error("radial_ke: cosh-argument series did not converge (r = " + std::to_string(r) +
              ", q = " + std::to_string(q) + ")");
}

} // namespace

MathieuSolution char_even(int m, double q) {
  if (m < 0 || m > kMaxMathieuOrder) {
    throw UnsupportedOrder("char_even: order " + std::to_string(m) + " outside 0.." +
                           std::to_string(kMaxMathieuOrder));
  }
  if (!std::isfinite(q) || std::abs(q) > kMaxMathieuParameter) {
    throw UsageError("char_even: |q| must not exceed " + std::to_string(kMaxMathieuParameter));
  }
  const int parity = m % 2;
  const int index = m / 2;
  int dim = std::max(25, index + static_cast<int>(std::ceil(2.0 * std::sqrt(std::abs(q)))) + 15);

  double previous = tridiagonal_eigenvalue(recurrence_matrix(parity, q, dim), index);
  SymmetricTridiagonal t;
  double lambda = previous;
  while (true) {
    const int next_dim = 2 * dim;
    if (next_dim > kMaxDimension) {
      throw TruncationFailure("char_even: characteristic value did not converge", previous, lambda);
    }
    t = recurrence_matrix(parity, q, next_dim);
    lambda = tridiagonal_eigenvalue(t, index);
    const double tol = 1e-12 * std::max({1.0, std::abs(lambda), std::abs(q)});
    dim = next_dim;
    if (std::abs(lambda - previous) <= tol) break;
    previous = lambda;
  }

  auto x = tridiagonal_eigenvector(t, lambda);
  if (parity == 0) x[0] /= std::numbers::sqrt2;

  // Trim the negligible tail.
  double amax = 0.0;
  for (double v : x) amax = std::max(amax, std::abs(v));
  std::size_t keep = x.size();
  while (keep > static_cast<std::size_t>(index) + 2 && std::abs(x[keep - 1]) < 1e-22 * amax) --keep;
  x.resize(keep);

  MathieuSolution sol;
  sol.m = m;
  sol.q = q;
  sol.lambda = lambda;
  sol.coeffs = std::move(x);
  sol.dimension = dim;
  if (coefficient_sum(sol) < 0.0) {
    for (double &a : sol.coeffs) a = -a;
  }
  return sol;
}

double ce(const MathieuSolution &sol, double theta) {
  double s = 0.0;
  for (std::size_t k = 0; k < sol.coeffs.size(); ++k) s += sol.coeffs[k] * std::cos(sol.harmonic(k) * theta);
  return s;
}

double ce_dtheta(const MathieuSolution &sol, double theta) {
  double s = 0.0;
  for (std::size_t k = 0; k < sol.coeffs.size(); ++k) {
    const double nu = sol.harmonic(k);
    s -= sol.coeffs[k] * nu * std::sin(nu * theta);
  }
  return s;
}

RadialValue radial_ce_scaled(const MathieuSolution &sol, double r) {
  if (r < 0.0) throw DomainError("radial_ce: r must be non-negative");
  if (sol.coeffs.empty()) throw UsageError("radial_ce: empty solution");
  if (sol.q == 0.0) {
    // Circular-degenerate limit: M'' = m^2 M with M'(0) = 0.
    return {std::cosh(sol.m * r), sol.m * std::sinh(sol.m * r), 0.0};
  }
  const double h = std::sqrt(std::abs(sol.q));
  const double v1 = h * std::exp(-r);
  const double v2 = h * std::exp(r);
  const std::size_t n = sol.coeffs.size();
  const bool odd = sol.parity() == 1;

  double sum = 0.0, dsum = 0.0;
  if (sol.q > 0.0) {
    const auto j1 = specfun::bessel_j_sequence(static_cast<int>(n) + 1, v1);
    const auto j2 = specfun::bessel_j_sequence(static_cast<int>(n) + 1, v2);
    for (std::size_t l = 0; l < n; ++l) {
      const double a = ((l % 2 == 0) ? 1.0 : -1.0) * sol.coeffs[l];
      if (!odd) {
        sum += a * j1[l] * j2[l];
        dsum += a * (-v1 * j_deriv(j1, l) * j2[l] + v2 * j1[l] * j_deriv(j2, l));
      } else {
        sum += a * (j1[l] * j2[l + 1] + j1[l + 1] * j2[l]);
        dsum += a * (-v1 * j_deriv(j1, l) * j2[l + 1] + v2 * j1[l] * j_deriv(j2, l + 1) -
                     v1 * j_deriv(j1, l + 1) * j2[l] + v2 * j1[l + 1] * j_deriv(j2, l));
      }
    }
    if (odd) {
      sum /= h;
      dsum /= h;
    }
    return {sum, dsum, 0.0};
  }

  const auto i1 = specfun::bessel_i_scaled_sequence(static_cast<int>(n) + 1, v1);
  const auto i2 = specfun::bessel_i_scaled_sequence(static_cast<int>(n) + 1, v2);
  for (std::size_t l = 0; l < n; ++l) {
    const double a = sol.coeffs[l];
    if (!odd) {
      sum += a * i1[l] * i2[l];
      dsum += a * (-v1 * i_deriv(i1, l) * i2[l] + v2 * i1[l] * i_deriv(i2, l));
    } else {
      sum += a * (i1[l] * i2[l + 1] + i1[l + 1] * i2[l]);
      dsum += a * (-v1 * i_deriv(i1, l) * i2[l + 1] + v2 * i1[l] * i_deriv(i2, l + 1) -
                   v1 * i_deriv(i1, l + 1) * i2[l] + v2 * i1[l + 1] * i_deriv(i2, l));
    }
  }
  if (odd) {
    sum /= h;
    dsum /= h;
  }
  return {sum, dsum, v1 + v2};
}

double radial_ce(const MathieuSolution &sol, double r) { return radial_ce_scaled(sol, r).unscaled_value(); }

double radial_ce_dr(const MathieuSolution &sol, double r) {
  return radial_ce_scaled(sol, r).unscaled_derivative();
}

RadialValue radial_ke_scaled(const MathieuSolution &sol, double r, KeSeries series) {
  if (!(sol.q < 0.0)) throw DomainError("radial_ke: requires the evanescent case q < 0");
  if (r < 0.0) throw DomainError("radial_ke: r must be non-negative");
  if (sol.coeffs.empty()) throw UsageError("radial_ke: empty solution");
  if (series == KeSeries::automatic) {
    const double v1 = std::sqrt(-sol.q) * std::exp(-r);
    series = v1 <= kKeProductLimit ? KeSeries::product : KeSeries::cosh_argument;
  }
  if (series == KeSeries::product) return ke_product(sol, r);
  if (r == 0.0) throw DomainError("radial_ke: cosh-argument series diverges at r = 0");
  return ke_cosh_argument(sol, r);
}

double radial_ke(const MathieuSolution &sol, double r) { return radial_ke_scaled(sol, r).unscaled_value(); }

double radial_ke_dr(const MathieuSolution &sol, double r) {
  return radial_ke_scaled(sol, r).unscaled_derivative();
}

} // namespace ellwin
