#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ellwin/bounds.hpp"
#include "ellwin/errors.hpp"
#include "oracles.hpp"

using namespace ellwin;

TEST_SUITE("bounds") {

TEST_CASE("thresholds") {
  CHECK(essential_spectrum_bottom() == 1.0);
  CHECK(neumann_floor() == 0.25);
  const auto [lo, hi] = discrete_window();
  CHECK(lo == 0.25);
  CHECK(hi == 1.0);
}

TEST_CASE("cylinder eigenvalues") {
  const double x01 = oracles::series_j_zero(0, 2.0, 3.0);
  CHECK(cylinder_eigenvalue(0, 1, 0, 1.0) == doctest::Approx(std::pow(x01 / std::numbers::pi, 2)).epsilon(1e-12));
  CHECK(cylinder_eigenvalue(0, 1, 0, 1.0) == doctest::Approx(0.58597).epsilon(1e-5));
  for (int m : {0, 2, 5})
    for (int n : {1, 3}) {
      CHECK(cylinder_eigenvalue(m, n, 1, 0.7) >= 1.0);
      CHECK(cylinder_eigenvalue(m, n, 0, 2.6) == doctest::Approx(cylinder_eigenvalue(m, n, 0, 1.3) / 4).epsilon(1e-14));
      CHECK(cylinder_eigenvalue(-m, n, 0, 1.3) == cylinder_eigenvalue(m, n, 0, 1.3));
    }
}

TEST_CASE("cylinder eigenvalue monotonicity") {
  for (int m = 0; m <= 4; ++m) {
    double prev = INFINITY;
    for (double xi = 0.2; xi < 5.0; xi += 0.2) {
      const double v = cylinder_eigenvalue(m, 1, 0, xi);
      CHECK(v < prev);
      prev = v;
    }
    for (int n = 1; n < 10; ++n) CHECK(cylinder_eigenvalue(m, n, 0, 1.0) < cylinder_eigenvalue(m, n + 1, 0, 1.0));
  }
}

TEST_CASE("ground state bracketing") {
  const auto rep = theorem1_check(0.5, 1.2, 1.0);
  CHECK(rep.ok);
  CHECK(rep.printed_pair_ok);
  CHECK(rep.bounds.lower == 0.25);
  CHECK(rep.bounds.index_pair_lower == std::pair{-1, -1});
  CHECK(rep.bounds.upper == doctest::Approx(cylinder_eigenvalue(0, 1, 0, 1.0)));
  CHECK(rep.bounds.index_pair_upper == std::pair{0, 1});
  CHECK(rep.bounds.lower < rep.bounds.upper);

  const auto swapped = theorem1_check(0.5, 1.0, 1.2);
  CHECK(swapped.ok == rep.ok);
  CHECK(swapped.bounds.upper == rep.bounds.upper);
}

TEST_CASE("large windows push the printed pair below the floor") {
  CHECK(cylinder_eigenvalue(0, 1, 0, 10.0) < neumann_floor());
  const auto rep = theorem1_check(0.26, 10.0, 10.0);
  CHECK(rep.ok);
  CHECK(rep.bounds.index_pair_upper != std::pair{0, 1});
  CHECK(rep.bounds.upper >= 0.26);
}

TEST_CASE("equal axes give adjacent pairs of one family") {
  const auto rep = theorem1_check(0.7, 1.0, 1.0, 2);
  CHECK(rep.bounds.index_pair_lower == std::pair{0, 1});
  CHECK(rep.bounds.index_pair_upper == std::pair{1, 1});
  CHECK(rep.bounds.lower == doctest::Approx(cylinder_eigenvalue(0, 1, 0, 1.0)));
  CHECK(rep.bounds.upper == 1.0);
  CHECK(rep.ok);
}

TEST_CASE("energies outside the window fail") {
  CHECK_FALSE(theorem1_check(0.25, 1.0, 0.5).ok);
  CHECK_FALSE(theorem1_check(1.0, 1.0, 0.5).ok);
  CHECK_FALSE(theorem1_check(0.1, 1.0, 0.5).ok);
  CHECK_FALSE(theorem1_check(1.3, 1.0, 0.5).ok);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(cylinder_eigenvalue(0, 1, 0, 0.0), UsageError);
  CHECK_THROWS_AS(cylinder_eigenvalue(0, 0, 0, 1.0), UsageError);
  CHECK_THROWS_AS(theorem1_check(0.5, -1.0, 1.0), UsageError);
  CHECK_THROWS_AS(theorem1_check(0.5, 1.0, 1.0, 0), UsageError);
}

}
