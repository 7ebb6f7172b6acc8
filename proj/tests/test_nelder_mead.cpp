#include <doctest.h>

#include <cmath>

#include "rbopt/nelder_mead.hpp"
#include "rbopt/rng.hpp"
#include "rbopt/test_functions.hpp"

using namespace rbopt;

TEST_CASE("recovers the minimum of a shifted 1-D quadratic") {
  const double a = 1.7;
  const Objective fn = [a](const std::vector<double>& x) {
    return (x[0] - a) * (x[0] - a);
  };
  const BoundsSet bounds = BoundsSet::uniform(1, -5.0, 5.0);
  NelderMeadParams p;
  p.tol = 1e-14;  // f-spread tolerance; the quadratic doubles the exponent
  const auto res = nelder_mead({-3.0}, fn, bounds, p, 10000);
  CHECK(res.x[0] == doctest::Approx(a).epsilon(1e-6));
  CHECK(res.f < 1e-12);
}

TEST_CASE("immediate convergence when started at the optimum") {
  const BoundsSet bounds = BoundsSet::uniform(4, -5.0, 5.0);
  NelderMeadParams p;
  const auto res = nelder_mead({0, 0, 0, 0}, sphere, bounds, p, 10000);
  CHECK(res.f <= p.tol);
  CHECK(res.iterations < p.max_iter);
}

TEST_CASE("never returns worse than the start") {
  const BoundsSet bounds = BoundsSet::uniform(6, -5.0, 10.0);
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> x0(6);
    for (double& v : x0) v = rng.uniform(-5.0, 10.0);
    const double f0 = rosenbrock(x0);
    const auto res = nelder_mead(x0, rosenbrock, bounds, NelderMeadParams{},
                                 2000);
    CHECK(res.f <= f0);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(res.x[i] >= bounds.lower[i]);
      CHECK(res.x[i] <= bounds.upper[i]);
    }
  }
}

TEST_CASE("stays inside the box when the optimum lies outside") {
  // Minimum of (x+7)^2 sits left of the box; expect the lower bound.
  const Objective fn = [](const std::vector<double>& x) {
    return (x[0] + 7.0) * (x[0] + 7.0);
  };
  const BoundsSet bounds = BoundsSet::uniform(1, -2.0, 2.0);
  const auto res = nelder_mead({1.0}, fn, bounds, NelderMeadParams{}, 10000);
  CHECK(res.x[0] == doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("respects the evaluation cap") {
  std::uint64_t calls = 0;
  const Objective fn = [&calls](const std::vector<double>& x) {
    ++calls;
    return sphere(x);
  };
  const BoundsSet bounds = BoundsSet::uniform(8, -5.0, 5.0);
  std::vector<double> x0(8, 3.0);
  const auto res = nelder_mead(x0, fn, bounds, NelderMeadParams{}, 40);
  CHECK(calls <= 40);
  CHECK(res.evals == calls);
}
