#include "dockplan/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dockplan {

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          std::vector<std::vector<double>> simplex,
                          const SimplexOptions& options) {
  if (simplex.size() < 2) {
    throw std::invalid_argument("nelder_mead: simplex needs at least two vertices");
  }
  const size_t dim = simplex[0].size();
  if (simplex.size() != dim + 1) {
    throw std::invalid_argument("nelder_mead: simplex must have n+1 vertices");
  }

  SimplexResult result;
  result.best_value = std::numeric_limits<double>::infinity();

  auto eval = [&](const std::vector<double>& x) {
    const double f = objective(x);
    ++result.evaluations;
    if (f < result.best_value) {
      result.best_value = f;
      result.best_point = x;
    }
    return f;
  };

  std::vector<double> values(simplex.size());
  for (size_t i = 0; i < simplex.size(); ++i) values[i] = eval(simplex[i]);

  std::vector<size_t> order(simplex.size());

  while (result.evaluations < options.max_evaluations) {
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return values[a] < values[b]; });

    const size_t best = order.front();
    const size_t worst = order.back();
    const size_t second_worst = order[order.size() - 2];

    const double spread = values[worst] - values[best];
    if (spread < options.tolerance * (1.0 + std::abs(values[best]))) {
      result.converged = true;
      break;
    }

    // Centroid of all vertices except the worst.
    std::vector<double> centroid(dim, 0.0);
    for (size_t i = 0; i < simplex.size(); ++i) {
      if (i == worst) continue;
      for (size_t d = 0; d < dim; ++d) centroid[d] += simplex[i][d];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    auto blend = [&](const std::vector<double>& from, double coeff) {
      std::vector<double> p(dim);
      for (size_t d = 0; d < dim; ++d) p[d] = centroid[d] + coeff * (centroid[d] - from[d]);
      return p;
    };

    const std::vector<double> reflected = blend(simplex[worst], options.reflection);
    const double f_reflected = eval(reflected);

    if (f_reflected < values[best]) {
      const std::vector<double> expanded =
          blend(simplex[worst], options.reflection * options.expansion);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
    } else if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
    } else if (f_reflected < values[worst]) {
      // Outside contraction.
      const std::vector<double> contracted =
          blend(simplex[worst], options.reflection * options.contraction);
      const double f_contracted = eval(contracted);
      if (f_contracted <= f_reflected) {
        simplex[worst] = contracted;
        values[worst] = f_contracted;
      } else {
        for (size_t i = 0; i < simplex.size(); ++i) {
          if (i == best) continue;
          for (size_t d = 0; d < dim; ++d) {
            simplex[i][d] =
                simplex[best][d] + options.shrink * (simplex[i][d] - simplex[best][d]);
          }
          values[i] = eval(simplex[i]);
        }
      }
    } else {
      // Inside contraction.
      const std::vector<double> contracted = blend(simplex[worst], -options.contraction);
      const double f_contracted = eval(contracted);
      if (f_contracted < values[worst]) {
        simplex[worst] = contracted;
        values[worst] = f_contracted;
      } else {
        for (size_t i = 0; i < simplex.size(); ++i) {
          if (i == best) continue;
          for (size_t d = 0; d < dim; ++d) {
            simplex[i][d] =
                simplex[best][d] + options.shrink * (simplex[i][d] - simplex[best][d]);
          }
          values[i] = eval(simplex[i]);
        }
      }
    }

    ++result.iterations;
    result.best_value_trace.push_back(result.best_value);
  }

  return result;
}

}  // namespace dockplan
