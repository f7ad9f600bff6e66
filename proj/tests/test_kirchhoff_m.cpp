#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kirchhoff/kirchhoff_m.hpp"

using namespace kirchhoff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("kirchhoff_m") {

TEST_CASE("eval_M on the power_shift family") {
  const KirchhoffM affine = KirchhoffM::power_shift(1, 1, 0, 1);
  CHECK(affine.eval_M(2.0) == 3.0);

  const KirchhoffM decaying = KirchhoffM::power_shift(1, 100, 1, -2);
  CHECK(decaying.eval_M(0.0) == 101.0);

  const KirchhoffM cubic = KirchhoffM::power_shift(1, 1e4, 0, 3);
  CHECK(cubic.eval_M(kPi / 2.0) ==
        doctest::Approx(1.0 + 1e4 * std::pow(kPi / 2.0, 3)).epsilon(1e-15));
  CHECK(cubic.eval_M(kPi / 2.0) == doctest::Approx(38758.85).epsilon(1e-6));

  CHECK_THROWS_AS(affine.eval_M(-1.0), Error);
  CHECK_THROWS_AS(KirchhoffM::power_shift(1, 100, 0, -2), Error);
  CHECK_THROWS_AS(KirchhoffM::constant(-5.0), Error);
}

TEST_CASE("G and H evaluations") {
  const KirchhoffM affine = KirchhoffM::power_shift(1, 1, 0, 1);  // M = 1 + t
  CHECK(affine.eval_G(2.0) == 6.0);
  CHECK(affine.eval_H(1.0) == 2.0);
  const KirchhoffM five = KirchhoffM::constant(5.0);
  for (double t : {0.0, 0.5, 2.0, 100.0}) CHECK(five.eval_G(t) == 5.0 * t);
}

TEST_CASE("invert_G closed forms and roundtrips") {
  const KirchhoffM affine = KirchhoffM::power_shift(1, 1, 0, 1);  // G = t + t^2
  CHECK(affine.invert_G(6.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(affine.invert_G(0.0) == 0.0);

  const KirchhoffM cubic = KirchhoffM::power_shift(1, 1e4, 0, 3);
  CHECK(cubic.invert_G(0.0) == 0.0);
  const double s = cubic.eval_G(3.7);
  CHECK(cubic.invert_G(s) == doctest::Approx(3.7).epsilon(1e-10));
}

TEST_CASE("invert_H closed forms and roundtrips") {
  const KirchhoffM affine = KirchhoffM::power_shift(1, 1, 0, 1);  // H = t + t^3
  CHECK(affine.invert_H(2.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(affine.invert_H(0.0) == 0.0);
  CHECK(affine.eval_H(affine.invert_H(5.0)) == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("R and G are mutual inverses across the family matrix") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  const KirchhoffM mats[] = {
      KirchhoffM::power_shift(1, 1, 0, 1),
      KirchhoffM::power_shift(1, 1e4, 0, 3),
      KirchhoffM::power_shift(0.5, 2, 3, 0.5),
      KirchhoffM::constant(5.0),
      KirchhoffM::custom([](double t) { return 2.0 + std::atan(t); }),
  };
  for (const KirchhoffM& m : mats) {
    for (int k = 0; k < 100; ++k) {
      const double t = dist(rng) * 100.0;
      const double s = m.eval_G(t);
      const double tt = m.invert_G(s);
      CHECK(std::abs(tt - t) <= 1e-10 * std::max(1.0, t));
      const double ss = m.eval_G(m.invert_G(s));
      CHECK(std::abs(ss - s) <= 1e-10 * std::max(1.0, std::abs(s)));
    }
  }
}

TEST_CASE("invert_G error paths") {
  const KirchhoffM affine = KirchhoffM::power_shift(1, 1, 0, 1);
  CHECK_THROWS_AS(affine.invert_G(-1.0), Error);  // below G(0)

  // G = t/(1+t)^2-ish is not monotone: inversion must refuse.
  const KirchhoffM humped = KirchhoffM::custom(
      [](double t) { return 1.0 + 100.0 / ((1.0 + t) * (1.0 + t)); });
  if (humped.classification().g_direction == 0) {
    CHECK_THROWS_AS(humped.invert_G(3.0), Error);
  }
}

TEST_CASE("classify: analytic and sampled flags") {
  const KirchhoffM affine = KirchhoffM::power_shift(1, 1, 0, 1);
  const Classification ca = affine.classification();
  CHECK(ca.m2_strictly_increasing);
  CHECK(ca.m3_invertible);
  CHECK(ca.g_direction == 1);
  CHECK(ca.h_increasing);
  CHECK_FALSE(ca.m1_nonincreasing);
  CHECK(ca.m0 == doctest::Approx(1.0).epsilon(1e-12));

  const KirchhoffM decaying = KirchhoffM::power_shift(1, 100, 1, -2);
  const Classification cd = decaying.classification();
  CHECK(cd.m1_nonincreasing);
  CHECK_FALSE(cd.m2_nondecreasing);
  CHECK_FALSE(cd.m2_strictly_increasing);

  const KirchhoffM five = KirchhoffM::constant(5.0);
  const Classification cc = five.classification();
  CHECK(cc.m1_nonincreasing);
  CHECK(cc.m2_nondecreasing);       // weak form holds for constants
  CHECK_FALSE(cc.m2_strictly_increasing);
  CHECK(cc.m3_invertible);
  CHECK(cc.g_direction == 1);
  CHECK(cc.m0 == 5.0);

  CHECK_THROWS_AS(five.classify(1), Error);
}

TEST_CASE("classify: nonincreasing M with increasing H forces G increasing") {
  // M = 1 + 1/(1+t) is nonincreasing and H(t) = t + t/(1+t^2) is increasing.
  const KirchhoffM m =
      KirchhoffM::custom([](double t) { return 1.0 + 1.0 / (1.0 + t); });
  const Classification c = m.classification();
  REQUIRE(c.m1_nonincreasing);
  REQUIRE(c.h_increasing);
  CHECK(c.g_direction == 1);
}

TEST_CASE("classify property: every increasing power family reports M2 and G increasing") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int k = 0; k < 25; ++k) {
    const double a = 5.0 * dist(rng);
    const double b = 0.1 + 5.0 * dist(rng);
    const double p = 0.2 + 4.0 * dist(rng);
    const KirchhoffM m = KirchhoffM::power_shift(a, b, 0.0, p);
    const Classification c = m.classification();
    CHECK(c.m2_strictly_increasing);
    CHECK(c.m3_invertible);
    CHECK(c.g_direction == 1);
    CHECK(m.monotonicity() == Monotonicity::increasing);
  }
  std::uniform_real_distribution<double> dneg(-3.0, -0.2);
  for (int k = 0; k < 25; ++k) {
    const KirchhoffM m = KirchhoffM::power_shift(1.0, 0.1 + dist(rng), 0.5 + dist(rng), dneg(rng));
    CHECK(m.classification().m1_nonincreasing);
    CHECK(m.monotonicity() == Monotonicity::nonincreasing);
  }
}

TEST_CASE("H is used on nonnegative arguments only") {
  const KirchhoffM m = KirchhoffM::power_shift(1, 1, 0, 1);
  CHECK_THROWS_AS(m.eval_H(-0.5), Error);
}

TEST_CASE("m0 is a lower bound of all samples") {
  const KirchhoffM mats[] = {
      KirchhoffM::power_shift(2, 3, 1, -0.5),
      KirchhoffM::custom([](double t) { return 2.0 + std::sin(t * 1e-3); }),
  };
  for (const KirchhoffM& m : mats) {
    const double m0 = m.m0();
    for (double t : {0.0, 1e-6, 0.1, 1.0, 100.0, 1e4, 1e6}) {
      CHECK(m.eval_M(t) >= m0 - 1e-12 * std::abs(m0));
    }
  }
}

TEST_CASE("nonlocal operator through closed-form roots") {
  const Interval d = make_interval(0.0, kPi, 2001);
  const KirchhoffM affine = KirchhoffM::power_shift(1, 1, 0, 1);

  const GridFunction zero = make_grid_function(d, 0.0);
  const Nonlinearity f_id = Nonlinearity::custom(
      [](double, double u) { return u; }, MonotoneHint::nondecreasing);
  CHECK(nonlocal_R(affine, f_id, zero) == 0.0);

  const GridFunction s = sample(d, [](double x) { return std::sin(x); });
  const Nonlinearity f_one = Nonlinearity::custom(
      [](double, double) { return 1.0; }, MonotoneHint::nondecreasing);
  // integral = 2, root of t + t^2 = 2 is exactly 1
  CHECK(nonlocal_R(affine, f_one, s) == doctest::Approx(1.0).epsilon(1e-6));

  // integral = pi/2, root of t + t^2 = pi/2 by the quadratic formula
  const double expected = (-1.0 + std::sqrt(1.0 + 2.0 * kPi)) / 2.0;
  CHECK(nonlocal_R(affine, f_id, s) == doctest::Approx(expected).epsilon(1e-6));

  // negative integrand falls below G(0)
  const Nonlinearity f_neg = Nonlinearity::custom(
      [](double, double) { return -1.0; }, MonotoneHint::none);
  GridFunction pos = sample(d, [](double x) { return std::sin(x); });
  CHECK_THROWS_AS(nonlocal_R(affine, f_neg, pos), Error);
}

}  // TEST_SUITE
