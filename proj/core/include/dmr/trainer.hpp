#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dmr/corpus.hpp"
#include "dmr/lambda_matrix.hpp"
#include "dmr/lbfgs.hpp"
#include "dmr/sampler.hpp"

namespace dmr {

struct TrainConfig {
  int topics = 100;
  double beta = 0.01;
  double sigma_default = 10.0;  // prior variance of the intercept column
  double sigma_other = 0.5;     // prior variance of every other feature
  int iterations = 1000;
  int burn_in = 250;
  int optimize_interval = 50;
  std::uint64_t seed = 0;
  PhiSmoothing smoothing = PhiSmoothing::vocabulary;
  OptimizerConfig optimizer;
  /// Optional progress sink; called once per optimization round.
  std::function<void(const std::string&)> log;

  void validate() const;  // throws std::invalid_argument
};

struct TraceEntry {
  int iteration;
  double before;
  double after;
};

struct TrainWarnings {
  bool alpha_capped = false;       // a dot product hit the exp cap during optimization
  bool line_search_failed = false;
};

struct ModelSnapshot {
  enum class Kind { dmr, lda };

  Kind kind = Kind::dmr;
  TrainConfig config;
  Vocabulary vocabulary;
  FeatureDictionary features;
  LambdaMatrix lambda;                  // topics x features (LDA: one column, ln alpha_t)
  std::vector<std::int64_t> topic_word;    // row-major topics x vocab
  std::vector<std::int64_t> topic_totals;  // per topic
  std::vector<TraceEntry> trace;
  TrainWarnings warnings;
  std::uint64_t corpus_digest = 0;  // digest of the training corpus file; 0 when untracked
};

/// Complete-data log likelihood of the topic assignments under document
/// priors alpha_dt = exp(x_d . lambda_t), plus the Gaussian log prior on
/// lambda (its constant normalizer omitted). Dot products are capped at
/// +-300 before exponentiation; `capped` is set when the cap engages.
double dmr_log_likelihood(const TopicState& state, const LambdaMatrix& lambda,
                          const Corpus& corpus, std::span<const double> variances,
                          bool* capped = nullptr);

/// Gradient of dmr_log_likelihood in lambda, with the convention that capped
/// entries have zero derivative through alpha (consistent with the capped
/// objective).
LambdaMatrix dmr_gradient(const TopicState& state, const LambdaMatrix& lambda,
                          const Corpus& corpus, std::span<const double> variances,
                          bool* capped = nullptr);

/// Maximizes dmr_log_likelihood over lambda with the current assignments
/// fixed. Never returns a matrix with a lower objective than the input.
/// Prior variances are read from corpus.features.
LambdaMatrix optimize_lambda(const TopicState& state, const LambdaMatrix& lambda,
                             const Corpus& corpus, const TrainConfig& config,
                             TrainWarnings* warnings = nullptr);

/// Stochastic EM: Gibbs sweeps with lambda optimized every
/// config.optimize_interval sweeps once config.burn_in is reached, plus a
/// final optimization when the last sweep is unaligned.
ModelSnapshot train_dmr(Corpus corpus, const TrainConfig& config);

/// One pass of the fixed-point update for a shared Dirichlet prior over
/// topics, iterated to convergence; never decreases the Dirichlet-multinomial
/// likelihood of the current doc-topic counts. All-zero counts return the
/// input unchanged.
std::vector<double> optimize_lda_alpha(const TopicState& state, std::vector<double> alpha);

/// LDA baseline on the same schedule, with a shared alpha vector optimized
/// in place of lambda. The snapshot stores lambda as a single intercept
/// column with ln alpha_t, so every evaluation path is shared with DMR.
ModelSnapshot train_lda(Corpus corpus, const TrainConfig& config);

}  // namespace dmr
