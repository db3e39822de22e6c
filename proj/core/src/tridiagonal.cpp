#include "ellwin/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellwin/errors.hpp"

namespace ellwin {

namespace {

double gershgorin_radius(const SymmetricTridiagonal &t, std::size_t k) {
  double r = 0.0;
  if (k > 0) r += std::abs(t.off[k - 1]);
  if (k + 1 < t.size()) r += std::abs(t.off[k]);
  return r;
}

// Solves (T - mu I) x = rhs in place with partial pivoting (LAPACK gtsv scheme).
void shifted_solve(const SymmetricTridiagonal &t, double mu, double pivot_floor,
                   std::vector<double> &rhs) {
  const std::size_t n = t.size();
  std::vector<double> d(n), du(n, 0.0), dl(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - mu;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    du[i] = t.off[i];
    dl[i] = t.off[i];
  }
  std::vector<double> du2(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = pivot_floor;
      const double fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      rhs[i + 1] -= fact * rhs[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      const double temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du2[i];
      }
      du[i] = temp;
      std::swap(rhs[i], rhs[i + 1]);
      rhs[i + 1] -= fact * rhs[i];
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = pivot_floor;
  rhs[n - 1] /= d[n - 1];
  if (n >= 2) rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / d[n - 2];
  for (std::size_t ii = n >= 2 ? n - 2 : 0; ii-- > 0;) {
    rhs[ii] = (rhs[ii] - du[ii] * rhs[ii + 1] - du2[ii] * rhs[ii + 2]) / d[ii];
  }
}

} // namespace

int sturm_count(const SymmetricTridiagonal &t, double x) {
  const std::size_t n = t.size();
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double b2 = k > 0 ? t.off[k - 1] * t.off[k - 1] : 0.0;
    d = (t.diag[k] - x) - (k > 0 ? b2 / d : 0.0);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

double tridiagonal_eigenvalue(const SymmetricTridiagonal &t, int index) {
  const std::size_t n = t.size();
  if (n == 0 || index < 0 || static_cast<std::size_t>(index) >= n) {
    throw UsageError("tridiagonal_eigenvalue: index outside matrix dimension");
  }
  double lo = t.diag[0] - gershgorin_radius(t, 0);
  double hi = t.diag[0] + gershgorin_radius(t, 0);
  for (std::size_t k = 1; k < n; ++k) {
    lo = std::min(lo, t.diag[k] - gershgorin_radius(t, k));
    hi = std::max(hi, t.diag[k] + gershgorin_radius(t, k));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(std::abs(lo), std::abs(hi));
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 2.0 * eps * std::max(std::abs(mid), 1e-3 * scale) || mid == lo || mid == hi) break;
    if (sturm_count(t, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> tridiagonal_eigenvector(const SymmetricTridiagonal &t, double lambda) {
  const std::size_t n = t.size();
  if (n == 0) throw UsageError("tridiagonal_eigenvector: empty matrix");
  if (n == 1) return {1.0};
  double norm = 0.0;
  for (std::size_t k = 0; k < n; ++k) norm = std::max(norm, std::abs(t.diag[k]) + gershgorin_radius(t, k));
  const double eps = std::numeric_limits<double>::epsilon();
  const double pivot_floor = eps * std::max(norm, 1.0);

  std::vector<double> x(n);
  // Deterministic start with no special structure.
  for (std::size_t k = 0; k < n; ++k) x[k] = 1.0 + 0.1 * std::sin(1.0 + 3.7 * static_cast<double>(k));
  for (int it = 0; it < 3; ++it) {
    shifted_solve(t, lambda, pivot_floor, x);
    double s = 0.0;
    for (double v : x) s += v * v;
    s = std::sqrt(s);
    if (!(s > 0.0) || !std::isfinite(s)) throw Error("tridiagonal_eigenvector: inverse iteration breakdown");
    for (double &v : x) v /= s;
  }
  return x;
}

} // namespace ellwin
