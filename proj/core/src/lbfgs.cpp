#include "dmr/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace dmr {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

struct Pair {
  std::vector<double> s;
  std::vector<double> y;
  double rho;
};

}  // namespace

MinimizeResult minimize(const Objective& f, std::span<const double> x0,
                        const OptimizerConfig& config) {
  if (x0.empty()) throw std::invalid_argument("minimize requires a nonempty x0");
  if (config.memory < 1) throw std::invalid_argument("optimizer memory must be >= 1");

  const std::size_t n = x0.size();
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> grad(n);
  MinimizeResult result;

  double value = f(x, grad);
  ++result.evaluations;
  if (!std::isfinite(value)) {
    throw std::invalid_argument("objective is not finite at the starting point");
  }

  std::vector<double> best_x = x;
  std::vector<double> best_grad = grad;
  double best_value = value;

  std::deque<Pair> pairs;
  std::vector<double> direction(n);
  std::vector<double> x_new(n);
  std::vector<double> grad_new(n);
  std::vector<double> armijo_x(n);
  std::vector<double> armijo_grad(n);
  std::vector<double> q(n);
  std::vector<double> alpha_buf;

  int iteration = 0;
  for (; iteration < config.max_iterations; ++iteration) {
    const double gnorm = inf_norm(grad);
    if (gnorm <= config.gradient_tolerance) {
      result.converged = true;
      break;
    }

    // Two-loop recursion for the search direction.
    std::copy(grad.begin(), grad.end(), q.begin());
    alpha_buf.assign(pairs.size(), 0.0);
    for (std::size_t i = pairs.size(); i-- > 0;) {
      const Pair& p = pairs[i];
      alpha_buf[i] = p.rho * dot(p.s, q);
      for (std::size_t j = 0; j < n; ++j) q[j] -= alpha_buf[i] * p.y[j];
    }
    double scale = 1.0;
    if (!pairs.empty()) {
      const Pair& last = pairs.back();
      const double yy = dot(last.y, last.y);
      if (yy > 0.0) scale = dot(last.s, last.y) / yy;
    }
    for (std::size_t j = 0; j < n; ++j) q[j] *= scale;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const Pair& p = pairs[i];
      const double beta = p.rho * dot(p.y, q);
      for (std::size_t j = 0; j < n; ++j) q[j] += (alpha_buf[i] - beta) * p.s[j];
    }
    for (std::size_t j = 0; j < n; ++j) direction[j] = -q[j];

    double dg = dot(direction, grad);
    if (!(dg < 0.0)) {
      // Not a descent direction; restart from steepest descent.
      pairs.clear();
      for (std::size_t j = 0; j < n; ++j) direction[j] = -grad[j];
      dg = dot(direction, grad);
      if (!(dg < 0.0)) break;  // gradient is zero to working precision
    }

    // Weak-Wolfe line search: bisect when sufficient decrease fails, expand
    // when the step is too short to satisfy the curvature condition. An
    // accepted step has s.y >= (curvature - 1) * step * dg > 0, which keeps
    // the implicit Hessian positive definite.
    double step = 1.0;
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    bool accepted = false;
    bool have_armijo = false;
    double armijo_step = 0.0;
    double armijo_value = value;
    double value_new = value;
    for (int ls = 0; ls < config.max_line_search_steps; ++ls) {
      for (std::size_t j = 0; j < n; ++j) x_new[j] = x[j] + step * direction[j];
      value_new = f(x_new, grad_new);
      ++result.evaluations;
      if (!(std::isfinite(value_new) &&
            value_new <= value + config.sufficient_decrease * step * dg)) {
        hi = step;
      } else if (dot(direction, grad_new) < config.curvature * dg) {
        have_armijo = true;
        armijo_step = step;
        armijo_value = value_new;
        armijo_x = x_new;
        armijo_grad = grad_new;
        lo = step;
      } else {
        accepted = true;
        break;
      }
      step = std::isinf(hi) ? 2.0 * step : 0.5 * (lo + hi);
    }
    if (!accepted && have_armijo) {
      // Curvature never caught up within the budget; take the best
      // sufficient-decrease point instead of giving up.
      step = armijo_step;
      value_new = armijo_value;
      x_new = armijo_x;
      grad_new = armijo_grad;
      accepted = true;
    }
    if (!accepted) {
      result.line_search_failed = true;
      break;
    }

    Pair p;
    p.s.resize(n);
    p.y.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      p.s[j] = x_new[j] - x[j];
      p.y[j] = grad_new[j] - grad[j];
    }
    const double sy = dot(p.s, p.y);
    // Accept the pair only when curvature increased enough to keep the
    // implicit Hessian positive definite.
    const double curvature_floor =
        std::max(std::numeric_limits<double>::epsilon(),
                 (config.curvature - 1.0) * step * dg);
    if (sy >= curvature_floor && sy > 0.0) {
      p.rho = 1.0 / sy;
      pairs.push_back(std::move(p));
      if (static_cast<int>(pairs.size()) > config.memory) pairs.pop_front();
    }

    x.swap(x_new);
    grad.swap(grad_new);
    value = value_new;
    if (value < best_value) {
      best_value = value;
      best_x = x;
      best_grad = grad;
    }
  }

  result.iterations = iteration;
  if (value < best_value) {
    best_value = value;
    best_x = x;
    best_grad = grad;
  }
  result.x = std::move(best_x);
  result.value = best_value;
  result.gradient_inf_norm = inf_norm(best_grad);
  if (result.gradient_inf_norm <= config.gradient_tolerance) result.converged = true;
  return result;
}

}  // namespace dmr
