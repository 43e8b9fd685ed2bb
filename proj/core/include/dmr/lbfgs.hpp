#pragma once

#include <functional>
#include <span>
#include <vector>

namespace dmr {

/// Objective callback: fills `gradient` (same length as `x`) and returns the
/// function value.
using Objective = std::function<double(std::span<const double> x, std::span<double> gradient)>;

struct OptimizerConfig {
  int memory = 5;
  double gradient_tolerance = 1e-5;  // infinity norm
  int max_iterations = 200;
  double sufficient_decrease = 1e-4;  // Wolfe c1
  double curvature = 0.9;             // Wolfe c2
  int max_line_search_steps = 60;
};

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  double gradient_inf_norm = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  bool line_search_failed = false;
};

/// Limited-memory BFGS with a weak-Wolfe line search. Returns the best
/// iterate seen, so the reported value never exceeds f(x0).
MinimizeResult minimize(const Objective& f, std::span<const double> x0,
                        const OptimizerConfig& config = {});

}  // namespace dmr
