#pragma once

#include <functional>
#include <vector>

namespace dockplan {

/// Downhill-simplex coefficients and stopping rules. The defaults are the
/// standard reflection/expansion/contraction/shrink values.
struct SimplexOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double tolerance = 1e-6;      // stop when spread < tolerance * (1 + |best|)
  int max_evaluations = 5000;
};

struct SimplexResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  /// Best-ever value after each iteration; non-increasing by construction.
  std::vector<double> best_value_trace;
};

/// Derivative-free downhill-simplex minimization from an explicit initial
/// simplex of n+1 vertices in n dimensions. Deterministic: no randomness,
/// stable ordering for ties. Returns the best point ever evaluated.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          std::vector<std::vector<double>> initial_simplex,
                          const SimplexOptions& options);

}  // namespace dockplan
