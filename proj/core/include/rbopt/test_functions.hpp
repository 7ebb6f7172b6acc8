#pragma once

#include <string>
#include <vector>

#include "rbopt/optimizers.hpp"

namespace rbopt {

/// Classic optimizer validation functions, each with global minimum 0 at a
/// known point (origin for sphere/rastrigin/ackley, the all-ones point for
/// rosenbrock). Any dimension >= 1.
double sphere(const std::vector<double>& x);
double rosenbrock(const std::vector<double>& x);
double rastrigin(const std::vector<double>& x);
double ackley(const std::vector<double>& x);

/// Lookup by name ("sphere", "rosenbrock", "rastrigin", "ackley");
/// throws std::invalid_argument for anything else.
Objective test_function(const std::string& name);

}  // namespace rbopt
