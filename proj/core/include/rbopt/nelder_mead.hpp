#pragma once

#include <cstdint>

#include "rbopt/optimizers.hpp"

namespace rbopt {

struct NelderMeadResult {
  std::vector<double> x;
  double f = std::numeric_limits<double>::infinity();
  std::uint64_t evals = 0;
  int iterations = 0;
};

/// Downhill simplex search clipped to the box. The simplex starts at x0
/// with one vertex displaced per coordinate by init_step_frac of its range
/// (flipped inward at the upper bound). Stops on f-spread < tol, max_iter,
/// or after max_evals objective calls, whichever first; the returned vertex
/// is the best point evaluated.
NelderMeadResult nelder_mead(const std::vector<double>& x0, const Objective& fn,
                             const BoundsSet& bounds,
                             const NelderMeadParams& p,
                             std::uint64_t max_evals);

}  // namespace rbopt
