#include "rbopt/fitness.hpp"

#include <cmath>
#include <limits>

#include "rbopt/errors.hpp"

namespace rbopt {

double fitness(const MetricsReport& r, const FitnessWeights& w) {
  const double s = static_cast<double>(r.switch_s);
  const double value = w.w1 * s * r.mu_star + w.w2 * r.mu_spread +
                       w.w3 * (s - 1.0) * r.power_p + w.w4 * r.c_lat +
                       w.w5 * r.c_long + w.w6 * r.eps1 + w.w7 * r.c_traff +
                       w.w8 * r.sinkage + w.w9 * r.pitch;
  if (!std::isfinite(value)) {
    throw EvaluationError("fitness: non-finite metric in report");
  }
  return value;
}

double objective(const std::vector<double>& x, const ObjectiveContext& ctx) {
  ctx.eval_counter.fetch_add(1, std::memory_order_relaxed);
  try {
    const DesignVector d = to_design(clamp(x, ctx.bounds));
    return -fitness(evaluate_all(d, ctx.scenario), ctx.weights);
  } catch (const EvaluationError&) {
    return std::numeric_limits<double>::infinity();
  } catch (const InstabilityError&) {
    return std::numeric_limits<double>::infinity();
  } catch (const GeometryError&) {
    return std::numeric_limits<double>::infinity();
  }
  // Parameter errors (std::invalid_argument) escape on purpose: a broken
  // scenario is a configuration problem, not a bad candidate point.
}

}  // namespace rbopt
