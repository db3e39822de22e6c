#include "ellwin/specfun.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "ellwin/errors.hpp"

namespace ellwin::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kRescale = 1e250;
constexpr double kSeriesEps = 1e-17;

void check_order(int m) {
  if (m < 0 || m > kMaxBesselOrder) {
    throw UnsupportedOrder("Bessel order " + std::to_string(m) +
                           " outside supported range 0.." +
                           std::to_string(kMaxBesselOrder));
  }
}

// Ascending series, used for single J_m evaluations with small x.
double j_series(int m, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= m; ++k) term *= half / k;
  double sum = term;
  const double mhalf2 = -half * half;
  for (int k = 1; k < 200; ++k) {
    term *= mhalf2 / (static_cast<double>(k) * (m + k));
    sum += term;
    if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return sum;
}

double j_value(int m, double x) {
  if (x < 0.0) throw DomainError("bessel_j: negative argument");
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  if (x <= 1.0) return j_series(m, x);
  return bessel_j_sequence(m, x)[static_cast<std::size_t>(m)];
}

// I_0, I_1 and K_0, K_1 by ascending series (x <= 2).
std::pair<double, double> k01_series(double x) {
  const double y = 0.25 * x * x;
  const double lg = std::log(0.5 * x);

  double i0 = 1.0, i1 = 0.5 * x;
  double k0sum = 0.0;
  {
    double term = 1.0, harmonic = 0.0;
    for (int k = 1; k < 100; ++k) {
      term *= y / (static_cast<double>(k) * k);
      harmonic += 1.0 / k;
      i0 += term;
      k0sum += term * harmonic;
      if (term < kSeriesEps * i0) break;
    }
  }
  double k1sum = 0.0;
  {
    // sum_k y^k / (k!(k+1)!) (psi(k+1) + psi(k+2))
    double term = 1.0, hk = 0.0;
    double i1sum = 1.0;
    k1sum = (hk - kEulerGamma) + (hk + 1.0 - kEulerGamma);
    for (int k = 1; k < 100; ++k) {
      term *= y / (static_cast<double>(k) * (k + 1));
      hk += 1.0 / k;
      i1sum += term;
      const double psi_sum = (hk - kEulerGamma) + (hk + 1.0 / (k + 1) - kEulerGamma);
      k1sum += term * psi_sum;
      if (term < kSeriesEps) break;
    }
    i1 = 0.5 * x * i1sum;
  }
  const double k0 = -(lg + kEulerGamma) * i0 + k0sum;
  const double k1 = 1.0 / x + lg * i1 - 0.25 * x * k1sum;
  return {k0, k1};
}

// Steed's continued fraction for K_0, K_1 (x > 2), scaled by e^x.
std::pair<double, double> k01_steed_scaled(double x) {
  constexpr int kMaxIter = 100000;
  constexpr double kEps = 1e-16;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25;
  double q = a1, c = a1, a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < kMaxIter; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h = a1 * h;
  const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
  const double k1 = k0 * (x + 0.5 - h) / x;
  return {k0, k1};
}

// Zero table: zeros_[m][n-1] = n-th zero of J_m.
std::mutex zero_mutex;
std::vector<std::vector<double>> zero_table;

double bisect_zero(int m, double lo, double hi) {
  double flo = j_value(m, lo);
  double fhi = j_value(m, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw Error("bessel_j_zero: bracket without sign change for order " + std::to_string(m));
  }
  while (hi - lo > 1e-13 * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = j_value(m, mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Caller holds zero_mutex.
void ensure_zeros(int m, int count) {
  if (static_cast<int>(zero_table.size()) <= m) zero_table.resize(static_cast<std::size_t>(m) + 1);
  auto have = static_cast<int>(zero_table[static_cast<std::size_t>(m)].size());
  if (have >= count) return;
  if (m == 0) {
    for (int k = have + 1; k <= count; ++k) {
      const double lo = (k - 0.5) * std::numbers::pi;
      const double hi = k * std::numbers::pi;
      zero_table[0].push_back(bisect_zero(0, lo, hi));
    }
    return;
  }
  // Zeros of J_m interlace those of J_{m-1}.
  ensure_zeros(m - 1, count + 1);
  const auto &prev = zero_table[static_cast<std::size_t>(m) - 1];
  for (int k = have + 1; k <= count; ++k) {
    const double lo = prev[static_cast<std::size_t>(k) - 1];
    const double hi = prev[static_cast<std::size_t>(k)];
    zero_table[static_cast<std::size_t>(m)].push_back(bisect_zero(m, lo, hi));
  }
}

} // namespace

std::vector<double> bessel_j_sequence(int nmax, double x) {
  if (nmax < 0) throw UsageError("bessel_j_sequence: negative nmax");
  if (x < 0.0) throw DomainError("bessel_j_sequence: negative argument");
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double big = std::max(static_cast<double>(nmax), x);
  const int start = 2 * ((static_cast<int>(big) + 16 + static_cast<int>(std::sqrt(40.0 * big))) / 2);
  double jp1 = 0.0, j = 1e-30, sum = 0.0;
  for (int k = start; k > 0; --k) {
    const double jm1 = (2.0 * k / x) * j - jp1;
    jp1 = j;
    j = jm1;
    if (std::abs(j) > kRescale) {
      j /= kRescale;
      jp1 /= kRescale;
      sum /= kRescale;
      for (auto &v : out) v /= kRescale;
    }
    const int idx = k - 1;
    if (idx <= nmax) out[static_cast<std::size_t>(idx)] = j;
    if (idx > 0 && idx % 2 == 0) sum += 2.0 * j;
  }
  const double norm = sum + j;
  for (auto &v : out) v /= norm;
  return out;
}

std::vector<double> bessel_i_scaled_sequence(int nmax, double x) {
  if (nmax < 0) throw UsageError("bessel_i_scaled_sequence: negative nmax");
  if (x < 0.0) throw DomainError("bessel_i_scaled_sequence: negative argument");
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  // e^x = I_0 + 2 sum_k I_k normalises the backward recurrence.
  const int start = std::max(nmax, static_cast<int>(std::ceil(std::sqrt(80.0 * std::max(x, 1.0))))) + 24;
  double ip1 = 0.0, i = 1e-30, sum = 0.0;
  for (int k = start; k > 0; --k) {
    const double im1 = (2.0 * k / x) * i + ip1;
    ip1 = i;
    i = im1;
    if (i > kRescale) {
      i /= kRescale;
      ip1 /= kRescale;
      sum /= kRescale;
      for (auto &v : out) v /= kRescale;
    }
    const int idx = k - 1;
    if (idx <= nmax) out[static_cast<std::size_t>(idx)] = i;
    if (idx > 0) sum += 2.0 * i;
  }
  const double norm = sum + i;
  for (auto &v : out) v /= norm;
  return out;
}

std::pair<double, double> bessel_k01_scaled(double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: argument must be positive");
  if (x <= 2.0) {
    auto [k0, k1] = k01_series(x);
    const double ex = std::exp(x);
    return {k0 * ex, k1 * ex};
  }
  return k01_steed_scaled(x);
}

std::vector<double> bessel_k_scaled_sequence(int nmax, double x) {
  if (nmax < 0) throw UsageError("bessel_k_scaled_sequence: negative nmax");
  auto [k0, k1] = bessel_k01_scaled(x);
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
  out[0] = k0;
  if (nmax >= 1) out[1] = k1;
  for (int n = 1; n < nmax; ++n) {
    out[static_cast<std::size_t>(n) + 1] =
        out[static_cast<std::size_t>(n) - 1] + (2.0 * n / x) * out[static_cast<std::size_t>(n)];
  }
  return out;
}

double bessel_j(int m, double x) {
  check_order(m);
  return j_value(m, x);
}

double bessel_j_prime(int m, double x) {
  check_order(m);
  if (m == 0) return -j_value(1, x);
  return 0.5 * (j_value(m - 1, x) - j_value(m + 1, x));
}

double bessel_i(int m, double x) {
  check_order(m);
  if (x < 0.0) throw DomainError("bessel_i: negative argument");
  return bessel_i_scaled_sequence(m, x)[static_cast<std::size_t>(m)] * std::exp(x);
}

double bessel_i_prime(int m, double x) {
  check_order(m);
  if (x < 0.0) throw DomainError("bessel_i: negative argument");
  const auto seq = bessel_i_scaled_sequence(m + 1, x);
  const double ex = std::exp(x);
  if (m == 0) return seq[1] * ex;
  return 0.5 * (seq[static_cast<std::size_t>(m) - 1] + seq[static_cast<std::size_t>(m) + 1]) * ex;
}

double bessel_k(int m, double x) {
  check_order(m);
  if (!(x > 0.0)) throw DomainError("bessel_k: argument must be positive");
  return bessel_k_scaled_sequence(m, x)[static_cast<std::size_t>(m)] * std::exp(-x);
}

double bessel_k_prime(int m, double x) {
  check_order(m);
  if (!(x > 0.0)) throw DomainError("bessel_k: argument must be positive");
  const auto seq = bessel_k_scaled_sequence(m + 1, x);
  const double emx = std::exp(-x);
  if (m == 0) return -seq[1] * emx;
  return -0.5 * (seq[static_cast<std::size_t>(m) - 1] + seq[static_cast<std::size_t>(m) + 1]) * emx;
}

BesselZero bessel_j_zero(int m, int n) {
  check_order(m);
  if (n < 1 || n > kMaxZeroIndex) {
    throw UsageError("bessel_j_zero: index " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxZeroIndex));
  }
  std::lock_guard lock(zero_mutex);
  ensure_zeros(m, n);
  return {m, n, zero_table[static_cast<std::size_t>(m)][static_cast<std::size_t>(n) - 1]};
}

} // namespace ellwin::specfun
