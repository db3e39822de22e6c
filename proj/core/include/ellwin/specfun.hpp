#pragma once

// Real-argument Bessel functions of integer order and zeros of J_m.
//
// Single-order evaluators cover orders 0..kMaxBesselOrder. The *_sequence
// helpers return every order 0..nmax at one argument and accept any nmax;
// the Mathieu product series rely on them for orders well above 60.

#include <utility>
#include <vector>

namespace ellwin::specfun {

inline constexpr int kMaxBesselOrder = 60;
inline constexpr int kMaxZeroIndex = 100;

struct BesselZero {
  int order = 0;
  int index = 0;
  double value = 0.0;
};

double bessel_j(int m, double x);
double bessel_j_prime(int m, double x);

double bessel_i(int m, double x);
double bessel_i_prime(int m, double x);

double bessel_k(int m, double x);
double bessel_k_prime(int m, double x);

/// J_0(x) .. J_nmax(x) by normalised backward recurrence.
std::vector<double> bessel_j_sequence(int nmax, double x);

/// e^{-x} I_n(x) for n = 0..nmax, x >= 0.
std::vector<double> bessel_i_scaled_sequence(int nmax, double x);

/// e^{x} K_n(x) for n = 0..nmax, x > 0.
std::vector<double> bessel_k_scaled_sequence(int nmax, double x);

/// (e^x K_0(x), e^x K_1(x)).
std::pair<double, double> bessel_k01_scaled(double x);

/// n-th positive zero of J_m (n >= 1). Zeros come from a lazily grown,
/// mutex-guarded table; the returned value is a copy.
BesselZero bessel_j_zero(int m, int n);

} // namespace ellwin::specfun
