#pragma once

#include <span>

namespace dmr {

/// Natural log of the Gamma function for x > 0.
/// Throws std::domain_error for x <= 0 or NaN.
double log_gamma(double x);

/// Digamma (derivative of log_gamma) for x > 0.
/// Throws std::domain_error for x <= 0 or NaN.
double digamma(double x);

/// log(sum_i exp(values[i])) without overflow. Throws std::invalid_argument
/// on an empty input.
double log_sum_exp(std::span<const double> values);

}  // namespace dmr
