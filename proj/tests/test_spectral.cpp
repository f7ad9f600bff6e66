#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kirchhoff/spectral.hpp"

using namespace kirchhoff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("spectral") {

TEST_CASE("torsion function closed forms") {
  const Interval d = make_interval(0.0, kPi, 4001);
  const GridFunction e = torsion(d);
  CHECK(std::abs(e.values[2000] - kPi * kPi / 8.0) <= 1e-10);
  CHECK(std::abs(norm_sq_h1(e) - kPi * kPi * kPi / 12.0) <= 1e-4);
  for (int i = 1; i < d.n - 1; ++i) CHECK(e.values[i] > 0.0);

  const Interval d01 = make_interval(0.0, 1.0, 1001);
  const GridFunction e01 = torsion(d01);
  CHECK(e01.max_value() == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(e01.values[500] == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("torsion is concave on the grid") {
  const Interval d = make_interval(0.0, 2.0, 501);
  const GridFunction e = torsion(d);
  const GridFunction lap = laplacian(e);
  for (int i = 1; i < d.n - 1; ++i) CHECK(lap.values[i] <= 1e-9);
}

TEST_CASE("principal eigenpair on (0, pi) matches sine") {
  const Interval d = make_interval(0.0, kPi, 2001);
  const EigenPair ep = principal_eigenpair(d, 1e-12);
  CHECK(std::abs(ep.lambda1 - 1.0) <= 1e-5);
  double err = 0.0;
  for (int i = 0; i < d.n; ++i) {
    err = std::max(err, std::abs(ep.phi1.values[i] - std::sin(d.node(i))));
  }
  CHECK(err <= 1e-5);
  CHECK(ep.phi1.sup_abs() == 1.0);
  for (int i = 1; i < d.n - 1; ++i) CHECK(ep.phi1.values[i] > 0.0);
}

TEST_CASE("principal eigenvalue on (0, 1) and the domain scaling law") {
  const Interval d = make_interval(0.0, 1.0, 2001);
  const EigenPair ep = principal_eigenpair(d, 1e-12);
  CHECK(std::abs(ep.lambda1 - kPi * kPi) <= 1e-3);

  const EigenPair big = principal_eigenpair(make_interval(0.0, 2.0 * kPi, 2001), 1e-12);
  const EigenPair small = principal_eigenpair(make_interval(0.0, kPi, 2001), 1e-12);
  CHECK(big.lambda1 == doctest::Approx(0.25 * small.lambda1).epsilon(1e-5));
}

TEST_CASE("eigen residual is small nodewise") {
  const Interval d = make_interval(0.0, kPi, 1001);
  const EigenPair ep = principal_eigenpair(d, 1e-8);
  const GridFunction lap = laplacian(ep.phi1);
  for (int i = 1; i < d.n - 1; ++i) {
    CHECK(std::abs(-lap.values[i] - ep.lambda1 * ep.phi1.values[i]) <= 1e-8);
  }
}

TEST_CASE("discrete lambda1 increases toward the continuum value with n") {
  double prev = 0.0;
  for (int n : {101, 401, 1601}) {
    const EigenPair ep = principal_eigenpair(make_interval(0.0, kPi, n), 1e-12);
    CHECK(ep.lambda1 > prev);
    CHECK(ep.lambda1 < 1.0);  // (4/h^2) sin^2(h/2) < 1
    prev = ep.lambda1;
  }
}

TEST_CASE("tolerance must be positive") {
  CHECK_THROWS_AS(principal_eigenpair(make_interval(0.0, 1.0, 11), 0.0), Error);
}

}  // TEST_SUITE
