#include <doctest.h>

#include <cmath>

#include "ellwin/errors.hpp"
#include "ellwin/specfun.hpp"
#include "oracles.hpp"

using namespace ellwin;
using namespace ellwin::specfun;

TEST_SUITE("specfun") {

TEST_CASE("J at the origin") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(7, 0.0) == 0.0);
}

TEST_CASE("J0 vanishes at its first zero") {
  CHECK(std::abs(bessel_j(0, 2.404826)) < 1e-6);
}

TEST_CASE("J agrees with the power series") {
  for (int m : {0, 1, 2, 5, 10, 20})
    for (double x : {0.1, 0.5, 1.0, 3.7, 8.0, 12.5, 19.0}) {
      CAPTURE(m);
      CAPTURE(x);
      CHECK(bessel_j(m, x) == doctest::Approx(oracles::series_j(m, x)).epsilon(1e-9));
    }
}

TEST_CASE("zeros against series bisection") {
  CHECK(bessel_j_zero(0, 1).value == doctest::Approx(2.4048255577).epsilon(1e-10));
  CHECK(bessel_j_zero(1, 1).value == doctest::Approx(3.8317059702).epsilon(1e-10));
  CHECK(bessel_j_zero(0, 2).value == doctest::Approx(5.5200781103).epsilon(1e-10));
  CHECK(bessel_j_zero(0, 1).value == doctest::Approx(oracles::series_j_zero(0, 2.0, 3.0)).epsilon(1e-12));
  CHECK(bessel_j_zero(1, 1).value == doctest::Approx(oracles::series_j_zero(1, 3.0, 4.0)).epsilon(1e-12));
  CHECK(bessel_j_zero(0, 2).value == doctest::Approx(oracles::series_j_zero(0, 5.0, 6.0)).epsilon(1e-12));
  const auto z = bessel_j_zero(3, 4);
  CHECK(z.order == 3);
  CHECK(z.index == 4);
}

TEST_CASE("zeros are roots, increase in n and exceed the order") {
  for (int m = 0; m <= 10; ++m) {
    double prev = 0.0;
    for (int n = 1; n <= 10; ++n) {
      const double x = bessel_j_zero(m, n).value;
      CAPTURE(m);
      CAPTURE(n);
      CHECK(x > prev);
      CHECK(std::abs(bessel_j(m, x)) <= 1e-10);
      CHECK(bessel_j(m, x - 1e-6) * bessel_j(m, x + 1e-6) < 0.0);
      if (n == 1) CHECK(x > m);
      prev = x;
    }
  }
}

TEST_CASE("zeros interlace between consecutive orders") {
  for (int m = 0; m < 8; ++m)
    for (int n = 1; n < 8; ++n) {
      CHECK(bessel_j_zero(m, n).value < bessel_j_zero(m + 1, n).value);
      CHECK(bessel_j_zero(m + 1, n).value < bessel_j_zero(m, n + 1).value);
    }
}

TEST_CASE("three-term recurrence") {
  for (int m = 1; m <= 12; ++m)
    for (double x = 0.5; x <= 20.0; x += 0.5) {
      const double lhs = bessel_j(m - 1, x) + bessel_j(m + 1, x);
      CHECK(std::abs(lhs - 2.0 * m / x * bessel_j(m, x)) < 1e-9);
    }
}

TEST_CASE("I and K") {
  CHECK(bessel_i(0, 0.0) == 1.0);
  CHECK(bessel_k(0, 1.0) == doctest::Approx(0.4210244382).epsilon(1e-9));
  for (int m : {0, 1, 3, 6})
    for (double x : {0.3, 1.0, 2.5, 7.0, 15.0}) {
      CAPTURE(m);
      CAPTURE(x);
      CHECK(bessel_k(m, x) == doctest::Approx(oracles::k_quadrature(m, x)).epsilon(1e-10));
    }
}

TEST_CASE("I-K Wronskian") {
  const double x = 1.7;
  const double w = bessel_i(2, x) * bessel_k_prime(2, x) - bessel_i_prime(2, x) * bessel_k(2, x);
  CHECK(std::abs(w + 1.0 / x) < 1e-9);
  for (int m = 0; m <= 10; ++m)
    for (double t : {0.2, 1.0, 4.0, 12.0}) {
      const double wt = bessel_i(m, t) * bessel_k_prime(m, t) - bessel_i_prime(m, t) * bessel_k(m, t);
      CHECK(std::abs(wt * t + 1.0) < 1e-9);
    }
}

TEST_CASE("J derivative by central differences") {
  for (int m : {0, 1, 4})
    for (double x : {0.7, 3.0, 9.0}) {
      const double h = 1e-5;
      const double fd = (bessel_j(m, x + h) - bessel_j(m, x - h)) / (2 * h);
      CHECK(bessel_j_prime(m, x) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("K positive and decreasing") {
  for (int m : {0, 1, 5}) {
    double prev = bessel_k(m, 0.05);
    for (double x = 0.1; x < 40.0; x += 0.25) {
      const double k = bessel_k(m, x);
      CHECK(k > 0.0);
      CHECK(k < prev);
      prev = k;
    }
  }
}

TEST_CASE("scaled sequences agree with single-order values") {
  const double x = 3.3;
  const auto i = bessel_i_scaled_sequence(8, x);
  const auto k = bessel_k_scaled_sequence(8, x);
  const auto j = bessel_j_sequence(8, x);
  for (int n = 0; n <= 8; ++n) {
    CHECK(i[n] == doctest::Approx(bessel_i(n, x) * std::exp(-x)).epsilon(1e-12));
    CHECK(k[n] == doctest::Approx(bessel_k(n, x) * std::exp(x)).epsilon(1e-12));
    CHECK(j[n] == doctest::Approx(oracles::series_j(n, x)).epsilon(1e-11));
  }
  const auto [k0, k1] = bessel_k01_scaled(x);
  CHECK(k0 == doctest::Approx(k[0]).epsilon(1e-14));
  CHECK(k1 == doctest::Approx(k[1]).epsilon(1e-14));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(bessel_j(kMaxBesselOrder + 1, 1.0), UnsupportedOrder);
  CHECK_THROWS_AS(bessel_k(0, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_k(1, -1.0), DomainError);
  CHECK_THROWS_AS(bessel_j_zero(0, 0), UsageError);
  CHECK_THROWS_AS(bessel_j_zero(0, kMaxZeroIndex + 1), UsageError);
}

}
