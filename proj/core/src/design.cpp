#include "rbopt/design.hpp"

#include <algorithm>
#include <stdexcept>

namespace rbopt {

BoundsSet::BoundsSet(std::vector<double> lo, std::vector<double> up)
    : lower(std::move(lo)), upper(std::move(up)) {
  if (lower.size() != upper.size()) {
    throw std::invalid_argument("bounds: lower/upper size mismatch");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) {
      throw std::invalid_argument("bounds: lower must be strictly below upper");
    }
  }
}

BoundsSet BoundsSet::uniform(std::size_t dim, double lo, double hi) {
  return BoundsSet(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

const char* to_string(InitStrategy s) {
  switch (s) {
    case InitStrategy::LowerBound: return "LowerBound";
    case InitStrategy::UpperBound: return "UpperBound";
    case InitStrategy::Mean: return "Mean";
    case InitStrategy::Random: return "Random";
  }
  return "?";
}

InitStrategy init_strategy_from_string(const std::string& name) {
  if (name == "LowerBound") return InitStrategy::LowerBound;
  if (name == "UpperBound") return InitStrategy::UpperBound;
  if (name == "Mean") return InitStrategy::Mean;
  if (name == "Random") return InitStrategy::Random;
  throw std::invalid_argument("unknown init strategy: " + name);
}

BoundsSet default_bounds() {
  return BoundsSet(
      {100.0, 100.0, 100.0, 90.0, 100.0, 100.0, 100.0, 20.0, 50.0, 1.0},
      {500.0, 300.0, 200.0, 180.0, 200.0, 300.0, 300.0, 100.0, 500.0, 5.0});
}

std::vector<double> clamp(const std::vector<double>& x, const BoundsSet& b) {
  if (x.size() != b.size()) {
    throw std::invalid_argument("clamp: dimension mismatch");
  }
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = std::min(b.upper[i], std::max(b.lower[i], x[i]));
  }
  return out;
}

std::vector<double> initial_point(InitStrategy strategy, const BoundsSet& b,
                                  Rng& rng) {
  const std::size_t n = b.size();
  std::vector<double> x(n);
  switch (strategy) {
    case InitStrategy::LowerBound:
      x = b.lower;
      break;
    case InitStrategy::UpperBound:
      x = b.upper;
      break;
    case InitStrategy::Mean:
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = 0.5 * (b.lower[i] + b.upper[i]);
      }
      break;
    case InitStrategy::Random:
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.uniform(b.lower[i], b.upper[i]);
      }
      break;
  }
  return x;
}

DesignVector to_design(const std::vector<double>& x) {
  if (x.size() != kDesignDim) {
    throw std::invalid_argument("to_design: expected 10 coordinates");
  }
  DesignVector d;
  d.x_r = x[0];
  d.y_r = x[1];
  d.z_r = x[2];
  d.gamma_rb = x[3];
  d.x_b = x[4];
  d.y_b1 = x[5];
  d.y_b2 = x[6];
  d.clearance_c = x[7];
  d.l_rb = x[8];
  d.gear_j = x[9];
  return d;
}

std::vector<double> from_design(const DesignVector& d) {
  return {d.x_r,  d.y_r,  d.z_r,         d.gamma_rb, d.x_b,
          d.y_b1, d.y_b2, d.clearance_c, d.l_rb,     d.gear_j};
}

}  // namespace rbopt
