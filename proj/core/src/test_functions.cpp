#include "rbopt/test_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace rbopt {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double sphere(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double rosenbrock(const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double rastrigin(const std::vector<double>& x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v);
  return s;
}

double ackley(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) +
         20.0 + std::exp(1.0);
}

Objective test_function(const std::string& name) {
  if (name == "sphere") return sphere;
  if (name == "rosenbrock") return rosenbrock;
  if (name == "rastrigin") return rastrigin;
  if (name == "ackley") return ackley;
  throw std::invalid_argument("unknown test function: " + name);
}

}  // namespace rbopt
