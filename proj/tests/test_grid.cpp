#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "kirchhoff/grid.hpp"
#include "kirchhoff/spectral.hpp"

using namespace kirchhoff;

namespace {
constexpr double kPi = std::numbers::pi;

double sup_err(const GridFunction& u, const std::function<double(double)>& ref,
               bool interior_only = false) {
  double m = 0.0;
  const int lo = interior_only ? 1 : 0;
  const int hi = interior_only ? u.size() - 1 : u.size();
  for (int i = lo; i < hi; ++i) m = std::max(m, std::abs(u.values[i] - ref(u.x(i))));
  return m;
}
}  // namespace

TEST_SUITE("grid") {

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(make_interval(1.0, 1.0, 5), Error);
  CHECK_THROWS_AS(make_interval(0.0, 1.0, 2), Error);
  const Interval d = make_interval(0.0, kPi, 4001);
  CHECK(d.h() == doctest::Approx(kPi / 4000).epsilon(1e-15));
  CHECK(d.node(0) == 0.0);
  CHECK(d.node(4000) == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("laplacian: zero, quadratic (exact), sine (O(h^2))") {
  const Interval d = make_interval(0.0, kPi, 1001);

  const GridFunction zero = make_grid_function(d, 0.0);
  const GridFunction lap0 = laplacian(zero);
  CHECK(lap0.sup_abs() == 0.0);

  // cancellation in the stencil floors the error near eps/h^2
  const GridFunction parab = sample(d, [](double x) { return x * (kPi - x); });
  const GridFunction lap1 = laplacian(parab);
  for (int i = 1; i < d.n - 1; ++i) {
    CHECK(std::abs(lap1.values[i] + 2.0) <= 1e-9);
  }
  CHECK(lap1.values[0] == 0.0);
  CHECK(lap1.values[d.n - 1] == 0.0);

  const GridFunction s = sample(d, [](double x) { return std::sin(x); });
  const GridFunction lap2 = laplacian(s);
  double err = 0.0;
  for (int i = 1; i < d.n - 1; ++i) {
    err = std::max(err, std::abs(lap2.values[i] + std::sin(d.node(i))));
  }
  CHECK(err <= 1e-5);
}

TEST_CASE("solve_poisson: zero, torsion, manufactured sine") {
  const Interval d = make_interval(0.0, kPi, 2001);

  const GridFunction u0 = solve_poisson(make_grid_function(d, 0.0), 0.0, 0.0);
  CHECK(u0.sup_abs() == 0.0);

  const GridFunction e = solve_poisson(make_grid_function(d, 1.0), 0.0, 0.0);
  CHECK(sup_err(e, [](double x) { return x * (kPi - x) / 2.0; }) <= 1e-11);
  CHECK(e.values[1000] == doctest::Approx(kPi * kPi / 8.0).epsilon(1e-12));

  const GridFunction g = sample(d, [](double x) { return std::sin(x); });
  const GridFunction u = solve_poisson(g, 0.0, 0.0);
  CHECK(sup_err(u, [](double x) { return std::sin(x); }) <= 1e-6);
}

TEST_CASE("solve_poisson honors nonzero boundary data") {
  const Interval d = make_interval(0.0, 1.0, 801);
  // -u'' = 0 with u(0)=2, u(1)=5 has the linear solution 2 + 3x.
  const GridFunction u = solve_poisson(make_grid_function(d, 0.0), 2.0, 5.0);
  CHECK(sup_err(u, [](double x) { return 2.0 + 3.0 * x; }) <= 1e-11);
}

TEST_CASE("poisson(laplacian(u)) recovers u with zero boundary values") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const Interval d = make_interval(0.0, 2.0, 1001);
  for (int rep = 0; rep < 5; ++rep) {
    GridFunction u = make_grid_function(d);
    for (int i = 1; i < d.n - 1; ++i) u.values[i] = dist(rng);
    GridFunction g = laplacian(u);
    for (double& v : g.values) v = -v;
    const GridFunction rec = solve_poisson(g, 0.0, 0.0);
    double rel = 0.0;
    for (int i = 1; i < d.n - 1; ++i) {
      rel = std::max(rel, std::abs(rec.values[i] - u.values[i]));
    }
    CHECK(rel / u.sup_abs() <= 1e-10);
  }
}

TEST_CASE("discrete maximum principle: nonnegative source, zero bc => nonnegative solution") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(0.0, 5.0);
  const Interval d = make_interval(-1.0, 2.0, 301);
  for (int rep = 0; rep < 20; ++rep) {
    GridFunction g = make_grid_function(d);
    for (int i = 1; i < d.n - 1; ++i) g.values[i] = dist(rng);
    const GridFunction u = solve_poisson(g, 0.0, 0.0);
    for (double v : u.values) CHECK(v >= -1e-14);
  }
}

TEST_CASE("norm_sq_h1 values and homogeneity") {
  const Interval d = make_interval(0.0, kPi, 4001);
  CHECK(norm_sq_h1(make_grid_function(d, 0.0)) == 0.0);

  const GridFunction s = sample(d, [](double x) { return std::sin(x); });
  CHECK(std::abs(norm_sq_h1(s) - kPi / 2.0) <= 1e-5);

  const GridFunction parab = sample(d, [](double x) { return x * (kPi - x); });
  CHECK(std::abs(norm_sq_h1(parab) - kPi * kPi * kPi / 3.0) <= 1e-4);

  GridFunction s3 = s;
  for (double& v : s3.values) v *= 3.0;
  CHECK(norm_sq_h1(s3) == doctest::Approx(9.0 * norm_sq_h1(s)).epsilon(1e-14));
}

TEST_CASE("integrate values") {
  const Interval d = make_interval(0.0, kPi, 2001);
  CHECK(integrate(make_grid_function(d, 0.0)) == 0.0);
  const GridFunction s = sample(d, [](double x) { return std::sin(x); });
  CHECK(std::abs(integrate(s) - 2.0) <= 1e-6);
  const GridFunction parab = sample(d, [](double x) { return x * (kPi - x); });
  // Composite trapezoid carries the exact error pi*h^2/6 ~ 1.29e-6 here.
  CHECK(std::abs(integrate(parab) - kPi * kPi * kPi / 6.0) <= 2e-6);
}

TEST_CASE("integrate and norm_sq_h1 converge at second order") {
  const auto f = [](double x) { return std::exp(x); };
  const double exact_int = std::exp(1.0) - 1.0;
  const double exact_nrm = (std::exp(2.0) - 1.0) / 2.0;
  double e_int[2], e_nrm[2];
  const int ns[2] = {101, 201};
  for (int k = 0; k < 2; ++k) {
    const Interval d = make_interval(0.0, 1.0, ns[k]);
    const GridFunction u = sample(d, f);
    e_int[k] = std::abs(integrate(u) - exact_int);
    e_nrm[k] = std::abs(norm_sq_h1(u) - exact_nrm);
  }
  CHECK(std::log2(e_int[0] / e_int[1]) >= 1.9);
  CHECK(std::log2(e_nrm[0] / e_nrm[1]) >= 1.9);
}

TEST_CASE("leq order relation") {
  const Interval d = make_interval(0.0, kPi, 4001);
  const GridFunction zero = make_grid_function(d, 0.0);
  const GridFunction e = torsion(d);
  CHECK(leq(zero, e).holds);

  const GridFunction s = sample(d, [](double x) { return std::sin(x); });
  const GridFunction parab =
      sample(d, [](double x) { return 0.405 * x * (kPi - x); });
  const LeqResult r = leq(s, parab);
  CHECK_FALSE(r.holds);
  CHECK(r.worst_node == 2000);  // the node at pi/2
  CHECK(r.worst_gap == doctest::Approx(1.0 - 0.405 * kPi * kPi / 4.0).epsilon(1e-10));

  const LeqResult eq = leq(s, s);
  CHECK(eq.holds);
  CHECK(eq.worst_gap == 0.0);

  const Interval d2 = make_interval(0.0, kPi, 11);
  CHECK_THROWS_AS(leq(s, make_grid_function(d2, 0.0)), Error);
}

TEST_CASE("csv roundtrip preserves every bit") {
  const Interval d = make_interval(0.25, 1.75, 17);
  const GridFunction u = sample(d, [](double x) { return std::sin(3.0 * x) / 7.0; });
  std::stringstream ss;
  write_csv(ss, u);
  const GridFunction back = read_csv(ss);
  CHECK(back.domain.n == d.n);
  CHECK(back.domain.a == d.a);
  CHECK(back.domain.b == d.b);
  CHECK(back.values == u.values);
}

TEST_CASE("csv rejects malformed input") {
  std::stringstream bad1("nope\n1,2\n");
  CHECK_THROWS_AS(read_csv(bad1), Error);
  std::stringstream bad2("x,value\n0,1\n0.5,nan_text\n1,1\n");
  CHECK_THROWS_AS(read_csv(bad2), Error);
}

}  // TEST_SUITE
