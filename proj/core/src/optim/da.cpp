#include "rbopt/optim/da.hpp"

#include <algorithm>
#include <cmath>

namespace rbopt::da {

namespace {

double gamma_shape(double q_visit) {
  return (3.0 - q_visit) / (2.0 * (q_visit - 1.0));
}

double scale_factor(double q_visit, double t_visit) {
  return std::sqrt(2.0 * (q_visit - 1.0)) /
         std::pow(t_visit, 1.0 / (3.0 - q_visit));
}

double clip(double v, double lo, double hi) {
  return std::min(hi, std::max(lo, v));
}

}  // namespace

double visiting_temperature(double t0, double q_visit, std::uint64_t t) {
  const double e = q_visit - 1.0;
  const double num = std::pow(2.0, e) - 1.0;
  const double den = std::pow(static_cast<double>(t) + 1.0, e) - 1.0;
  return t0 * num / den;
}

double sample_jump(double q_visit, double t_visit, Rng& rng) {
  const double g = rng.gamma(gamma_shape(q_visit));
  const double y = scale_factor(q_visit, t_visit) * std::sqrt(g);
  return rng.normal() / y;
}

bool accept(double delta, double q_accept, double t_accept, Rng& rng) {
  if (delta <= 0.0) return true;
  const double base = 1.0 + (q_accept - 1.0) * delta / t_accept;
  if (base <= 0.0) return false;
  const double p = std::pow(base, 1.0 / (1.0 - q_accept));
  return rng.uniform01() < p;
}

void step(State& s, const DaParams& hp, const BoundsSet& bounds,
          const Objective& fn, Rng& rng) {
  const std::size_t n = bounds.size();
  const double tv = visiting_temperature(hp.t0, hp.q_visit, s.t);
  const double ta = tv / static_cast<double>(s.t);
  const double sf = scale_factor(hp.q_visit, tv);

  std::vector<double> y(n);
  // Whole-vector moves: one tail draw stretches an isotropic gaussian.
  for (std::size_t k = 0; k < n; ++k) {
    const double g = rng.gamma(gamma_shape(hp.q_visit));
    const double div = sf * std::sqrt(g);
    for (std::size_t j = 0; j < n; ++j) {
      const double dx = rng.normal() / div * bounds.range(j);
      y[j] = clip(s.x[j] + dx, bounds.lower[j], bounds.upper[j]);
    }
    const double fy = fn(y);
    if (accept(fy - s.fx, hp.q_accept, ta, rng)) {
      s.x = y;
      s.fx = fy;
    }
  }
  // Coordinate-wise refinements at the same temperature.
  for (std::size_t j = 0; j < n; ++j) {
    y = s.x;
    const double dx = sample_jump(hp.q_visit, tv, rng) * bounds.range(j);
    y[j] = clip(s.x[j] + dx, bounds.lower[j], bounds.upper[j]);
    const double fy = fn(y);
    if (accept(fy - s.fx, hp.q_accept, ta, rng)) {
      s.x = y;
      s.fx = fy;
    }
  }
  ++s.t;
}

}  // namespace rbopt::da
