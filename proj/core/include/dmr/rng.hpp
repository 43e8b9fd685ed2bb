#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace dmr {

/// Deterministic random source. All draws are derived from the raw 64-bit
/// engine output with fixed arithmetic, so a seed fixes the full trajectory
/// regardless of platform or standard-library version.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in (0, 1).
  double uniform_pos();
  /// Uniform integer in [0, n). Requires n >= 1.
  int uniform_int(int n);
  /// Standard normal via Box-Muller.
  double normal();
  /// Gamma(shape, 1) via Marsaglia-Tsang. Requires shape > 0.
  double gamma(double shape);
  /// Dirichlet draw with the given concentration parameters.
  void dirichlet(std::span<const double> alpha, std::span<double> out);
  std::vector<double> dirichlet(std::span<const double> alpha);
  /// Index draw proportional to nonnegative weights (not necessarily
  /// normalized). Requires a positive total.
  int discrete(std::span<const double> weights);

  /// Independent substream; derive(k) for distinct k gives decorrelated
  /// generators with reproducible seeding.
  Rng derive(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used for seed mixing throughout.
std::uint64_t mix_seed(std::uint64_t value);

}  // namespace dmr
