#include <doctest.h>

#include <json.hpp>

#include "rbopt/design.hpp"
#include "rbopt/serialization.hpp"

using namespace rbopt;

TEST_CASE("default bounds match the design table") {
  const BoundsSet b = default_bounds();
  REQUIRE(b.size() == 10);
  CHECK(b.lower[0] == 100.0);  // X_r
  CHECK(b.upper[0] == 500.0);
  CHECK(b.lower[1] == 100.0);  // Y_r
  CHECK(b.upper[1] == 300.0);
  CHECK(b.lower[2] == 100.0);  // Z_r
  CHECK(b.upper[2] == 200.0);
  CHECK(b.lower[3] == 90.0);   // gamma_rb
  CHECK(b.upper[3] == 180.0);
  CHECK(b.lower[4] == 100.0);  // X_b
  CHECK(b.upper[4] == 200.0);
  CHECK(b.lower[7] == 20.0);   // clearance
  CHECK(b.upper[7] == 100.0);
  CHECK(b.lower[8] == 50.0);   // L_rb
  CHECK(b.upper[8] == 500.0);
  CHECK(b.lower[9] == 1.0);    // gear ratio, dimensionless
  CHECK(b.upper[9] == 5.0);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.lower[i] < b.upper[i]);
}

TEST_CASE("bounds constructor validates") {
  CHECK_THROWS_AS(BoundsSet({0.0, 1.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(BoundsSet({0.0, 2.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("clamp projects onto the box") {
  const BoundsSet b = default_bounds();
  Rng rng(7);
  const std::vector<double> inside = initial_point(InitStrategy::Mean, b, rng);
  CHECK(clamp(inside, b) == inside);

  std::vector<double> x = inside;
  x[0] = 900.0;
  CHECK(clamp(x, b)[0] == 500.0);
  x[0] = -3.0;
  CHECK(clamp(x, b)[0] == 100.0);

  CHECK_THROWS_AS(clamp(std::vector<double>(3, 0.0), b),
                  std::invalid_argument);
}

TEST_CASE("clamp is idempotent and monotone") {
  const BoundsSet b = default_bounds();
  Rng rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(b.size()), y(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      x[i] = rng.uniform(-1000.0, 1000.0);
      y[i] = x[i] + rng.uniform(0.0, 500.0);  // y >= x elementwise
    }
    const auto cx = clamp(x, b);
    CHECK(clamp(cx, b) == cx);
    const auto cy = clamp(y, b);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(cx[i] <= cy[i]);
  }
}

TEST_CASE("initial point strategies") {
  const BoundsSet b = default_bounds();
  Rng rng(1);

  CHECK(initial_point(InitStrategy::LowerBound, b, rng) == b.lower);
  CHECK(initial_point(InitStrategy::UpperBound, b, rng) == b.upper);

  const auto mean = initial_point(InitStrategy::Mean, b, rng);
  CHECK(mean[0] == 300.0);  // X_r midpoint
  const auto lo = initial_point(InitStrategy::LowerBound, b, rng);
  const auto hi = initial_point(InitStrategy::UpperBound, b, rng);
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(mean[i] == doctest::Approx(0.5 * (lo[i] + hi[i])).epsilon(1e-15));
  }
}

TEST_CASE("random init is seed-reproducible and seed-sensitive") {
  const BoundsSet b = default_bounds();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng a(seed), c(seed), d(seed + 1000);
    const auto xa = initial_point(InitStrategy::Random, b, a);
    const auto xc = initial_point(InitStrategy::Random, b, c);
    const auto xd = initial_point(InitStrategy::Random, b, d);
    CHECK(xa == xc);
    CHECK(xa != xd);
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(xa[i] >= b.lower[i]);
      CHECK(xa[i] <= b.upper[i]);
    }
  }
}

TEST_CASE("design vector round trip") {
  const BoundsSet b = default_bounds();
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = initial_point(InitStrategy::Random, b, rng);
    CHECK(from_design(to_design(x)) == x);
  }

  const DesignVector d = to_design(b.lower);
  CHECK(d.x_r == 100.0);
  CHECK(d.gamma_rb == 90.0);
  CHECK(d.clearance_c == 20.0);
  CHECK(d.gear_j == 1.0);

  CHECK_THROWS_AS(to_design(std::vector<double>(9, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("flat coordinate order is stable") {
  DesignVector d;
  d.x_r = 1;
  d.y_r = 2;
  d.z_r = 3;
  d.gamma_rb = 4;
  d.x_b = 5;
  d.y_b1 = 6;
  d.y_b2 = 7;
  d.clearance_c = 8;
  d.l_rb = 9;
  d.gear_j = 10;
  CHECK(from_design(d) == std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("json round trips use snake_case field names") {
  nlohmann::json j = to_design(default_bounds().lower);
  CHECK(j.at("x_r") == 100.0);
  CHECK(j.at("gear_j") == 1.0);
  DesignVector d = j.get<DesignVector>();
  CHECK(from_design(d) == default_bounds().lower);

  const BoundsSet b = default_bounds();
  nlohmann::json jb = b;
  const BoundsSet b2 = jb.get<BoundsSet>();
  CHECK(b2.lower == b.lower);
  CHECK(b2.upper == b.upper);

  ScenarioParams sc;
  nlohmann::json js = sc;
  CHECK(js.at("wheel_diameter") == 170.0);
  CHECK(js.at("rough_threshold_c") == 10.0);
  CHECK(js.at("soil").at("n_exp") == 1.10);
  const ScenarioParams sc2 = js.get<ScenarioParams>();
  CHECK(sc2.alpha == sc.alpha);
  CHECK(sc2.torque_const == sc.torque_const);

  FitnessWeights w;
  nlohmann::json jw = w;
  CHECK(jw.at("w5") == 5.0);
  const FitnessWeights w2 = jw.get<FitnessWeights>();
  CHECK(w2.w6 == -3.0);
}

TEST_CASE("init strategy names round trip") {
  for (InitStrategy s : {InitStrategy::LowerBound, InitStrategy::UpperBound,
                         InitStrategy::Mean, InitStrategy::Random}) {
    CHECK(init_strategy_from_string(to_string(s)) == s);
  }
  CHECK_THROWS(init_strategy_from_string("Median"));
}
