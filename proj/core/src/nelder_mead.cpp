#include "rbopt/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rbopt {

namespace {

std::vector<double> clip(std::vector<double> x, const BoundsSet& b) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = std::min(b.upper[i], std::max(b.lower[i], x[i]));
  }
  return x;
}

}  // namespace

NelderMeadResult nelder_mead(const std::vector<double>& x0, const Objective& fn,
                             const BoundsSet& bounds, const NelderMeadParams& p,
                             std::uint64_t max_evals) {
  const std::size_t n = x0.size();
  NelderMeadResult out;
  if (max_evals == 0) {
    out.x = clip(x0, bounds);
    return out;
  }

  std::uint64_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return fn(x);
  };

  // Simplex: x0 plus one vertex per coordinate, displaced inward when the
  // step would leave the box.
  std::vector<std::vector<double>> v;
  v.reserve(n + 1);
  v.push_back(clip(x0, bounds));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> vi = v[0];
    const double step = p.init_step_frac * bounds.range(i);
    vi[i] = (vi[i] + step <= bounds.upper[i]) ? vi[i] + step : vi[i] - step;
    v.push_back(std::move(vi));
  }

  std::vector<double> f(n + 1, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i <= n && evals < max_evals; ++i) {
    f[i] = eval(v[i]);
  }

  std::vector<std::size_t> order(n + 1);
  auto sort_order = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  };
  sort_order();

  int iter = 0;
  while (iter < p.max_iter && evals < max_evals) {
    const std::size_t best = order[0];
    const std::size_t second_worst = order[n - 1];
    const std::size_t worst = order[n];

    if (std::isfinite(f[best]) && std::isfinite(f[worst]) &&
        f[worst] - f[best] < p.tol) {
      break;
    }
    ++iter;

    // Centroid of all vertices but the worst.
    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += v[k][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto along = [&](double coeff) {
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = centroid[j] + coeff * (centroid[j] - v[worst][j]);
      }
      return clip(std::move(x), bounds);
    };

    std::vector<double> xr = along(p.reflect);
    const double fr = eval(xr);

    if (fr < f[best]) {
      if (evals < max_evals) {
        std::vector<double> xe = along(p.reflect * p.expand);
        const double fe = eval(xe);
        if (fe < fr) {
          v[worst] = std::move(xe);
          f[worst] = fe;
        } else {
          v[worst] = std::move(xr);
          f[worst] = fr;
        }
      } else {
        v[worst] = std::move(xr);
        f[worst] = fr;
      }
    } else if (fr < f[second_worst]) {
      v[worst] = std::move(xr);
      f[worst] = fr;
    } else {
      bool contracted = false;
      if (evals < max_evals) {
        if (fr < f[worst]) {
          std::vector<double> xc = along(p.reflect * p.contract);
          const double fc = eval(xc);
          if (fc <= fr) {
            v[worst] = std::move(xc);
            f[worst] = fc;
            contracted = true;
          }
        } else {
          std::vector<double> xc = along(-p.contract);
          const double fc = eval(xc);
          if (fc < f[worst]) {
            v[worst] = std::move(xc);
            f[worst] = fc;
            contracted = true;
          }
        }
      }
      if (!contracted) {
        // Shrink everything toward the best vertex.
        for (std::size_t k = 0; k <= n && evals < max_evals; ++k) {
          if (k == best) continue;
          for (std::size_t j = 0; j < n; ++j) {
            v[k][j] = v[best][j] + p.shrink * (v[k][j] - v[best][j]);
          }
          f[k] = eval(v[k]);
        }
      }
    }
    sort_order();
  }

  out.x = v[order[0]];
  out.f = f[order[0]];
  out.evals = evals;
  out.iterations = iter;
  return out;
}

}  // namespace rbopt
