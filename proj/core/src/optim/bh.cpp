#include "rbopt/optim/bh.hpp"

#include <algorithm>

#include "rbopt/nelder_mead.hpp"
#include "rbopt/optim/sa.hpp"

namespace rbopt::bh {

void iterate(State& s, const BhParams& hp, const BoundsSet& bounds,
             const Objective& fn, std::uint64_t max_evals, Rng& rng) {
  const std::size_t n = bounds.size();

  std::vector<double> start(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double amp = hp.displacement_frac * bounds.range(j);
    start[j] = std::min(
        bounds.upper[j],
        std::max(bounds.lower[j], s.x[j] + rng.uniform(-amp, amp)));
  }

  const NelderMeadResult local =
      nelder_mead(start, fn, bounds, hp.local, max_evals);

  if (sa::accept(local.f - s.fx, hp.temperature, rng)) {
    s.x = local.x;
    s.fx = local.f;
  }
}

}  // namespace rbopt::bh
