#include "oracles.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace oracles {

double series_j(int m, double x) {
  const long double h = 0.5L * x;
  long double term = 1.0L;
  for (int k = 1; k <= m; ++k) term *= h / k;
  long double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= -h * h / (static_cast<long double>(k) * (k + m));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum) && k > h) break;
  }
  return static_cast<double>(sum);
}

double bisect(const std::function<double(double)> &f, double lo, double hi, double tol) {
  double flo = f(lo);
  if (flo * f(hi) > 0.0) throw std::invalid_argument("bisect: no sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double k_quadrature(int m, double x) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double t) {
    const double arg = x * std::cosh(t);
    if (arg > 700.0) return 0.0;
    return std::exp(-arg) * std::cosh(m * t);
  };
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

double integrate(const std::function<double(double)> &f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 6, 1e-13);
}

double dense_mathieu_lambda(int m, double q, int K) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(K, K);
  const int p = m % 2;
  for (int k = 0; k < K; ++k) {
    const double h = 2 * k + p;
    A(k, k) = h * h;
    if (k + 1 < K) A(k, k + 1) = A(k + 1, k) = q;
  }
  if (p == 0) {
    A(0, 1) = A(1, 0) = std::numbers::sqrt2 * q;
  } else {
    A(0, 0) += q;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(m / 2);
}

namespace {

// N'(pi/2) for N'' = -(lambda - 2q cos 2t) N, N(0) = 1, N'(0) = 0.
double angular_end_slope(double q, double lambda) {
  const int steps = 4000;
  const double h = 0.5 * std::numbers::pi / steps;
  double y = 1.0, v = 0.0, t = 0.0;
  auto acc = [&](double tt, double yy) { return -(lambda - 2.0 * q * std::cos(2.0 * tt)) * yy; };
  for (int i = 0; i < steps; ++i) {
    const double k1y = v, k1v = acc(t, y);
    const double k2y = v + 0.5 * h * k1v, k2v = acc(t + 0.5 * h, y + 0.5 * h * k1y);
    const double k3y = v + 0.5 * h * k2v, k3v = acc(t + 0.5 * h, y + 0.5 * h * k2y);
    const double k4y = v + h * k3v, k4v = acc(t + h, y + h * k3y);
    y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
    v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    t += h;
  }
  return v;
}

} // namespace

double shooting_mathieu_lambda(double q, double lo, double hi) {
  return bisect([&](double l) { return angular_end_slope(q, l); }, lo, hi, 1e-13);
}

double rk4_radial(double q, double lambda, double r, int steps) {
  const double h = r / steps;
  double y = 1.0, v = 0.0, t = 0.0;
  auto acc = [&](double tt, double yy) { return (lambda - 2.0 * q * std::cosh(2.0 * tt)) * yy; };
  for (int i = 0; i < steps; ++i) {
    const double k1y = v, k1v = acc(t, y);
    const double k2y = v + 0.5 * h * k1v, k2v = acc(t + 0.5 * h, y + 0.5 * h * k1y);
    const double k3y = v + 0.5 * h * k2v, k3v = acc(t + 0.5 * h, y + 0.5 * h * k2y);
    const double k4y = v + h * k3v, k4v = acc(t + h, y + h * k3y);
    y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
    v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    t += h;
  }
  return y;
}

double series_j_zero(int m, double lo, double hi) {
  return bisect([m](double x) { return series_j(m, x); }, lo, hi, 1e-14);
}

} // namespace oracles
