#include <doctest.h>

#include <cmath>
#include <vector>

#include "rbopt/rng.hpp"

using namespace rbopt;

TEST_CASE("equal seeds give identical streams") {
  Rng a(99), b(99);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("uniform01 stays in [0,1)") {
  Rng rng(1);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("uniform mean is near the midpoint") {
  Rng rng(2);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += rng.uniform(2.0, 4.0);
  CHECK(sum / n == doctest::Approx(3.0).epsilon(0.01));
}

TEST_CASE("index covers the range uniformly") {
  Rng rng(3);
  std::vector<int> counts(7, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) ++counts[rng.index(7)];
  for (int c : counts) {
    CHECK(c > 9000);
    CHECK(c < 11000);
  }
}

TEST_CASE("normal moments") {
  Rng rng(4);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(mean == doctest::Approx(0.0).epsilon(0.01));
  CHECK(std::abs(mean) < 0.01);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("gamma moments for small and large shape") {
  for (double shape : {0.117, 0.5, 1.0, 4.6}) {
    Rng rng(5);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
      const double g = rng.gamma(shape);
      CHECK(g >= 0.0);
      sum += g;
    }
    CHECK(sum / n == doctest::Approx(shape).epsilon(0.03));
  }
}

TEST_CASE("split streams decorrelate") {
  Rng a(7);
  Rng b = a.split();
  // The parent moved one step; the child must not replay it.
  int same = 0;
  for (int i = 0; i < 1000; ++i) {
    if (a.next_u64() == b.next_u64()) ++same;
  }
  CHECK(same == 0);
}
