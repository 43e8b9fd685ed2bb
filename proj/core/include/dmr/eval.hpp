#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dmr/corpus.hpp"
#include "dmr/rng.hpp"
#include "dmr/sampler.hpp"
#include "dmr/trainer.hpp"

namespace dmr {

struct EvalConfig {
  int el_samples = 1000;          // |S| topic-multinomial samples per document
  int conditioning_sweeps = 200;  // sweeps over the conditioning half
  int conditioning_burn_in = 50;  // extra sweeps before the counted ones
  int prediction_samples = 100;   // assignment sequences per document
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

/// Topic-word table from the snapshot's counts under its configured
/// smoothing.
TopicWordTable model_phi(const ModelSnapshot& model);

/// Document prior under the model; features must index the model dictionary.
DirichletPrior document_prior(const ModelSnapshot& model, const FeatureVector& features);

/// Log of the average held-out word probability over el_samples draws of the
/// topic multinomial from the document's prior. Empty documents score 0.
/// Deterministic: the RNG stream is derived from the seed and document id.
double empirical_likelihood(const ModelSnapshot& model, const Document& doc,
                            const EvalConfig& config);

struct ElDocEntry {
  std::string id;
  double log_likelihood;
  int tokens;
};

struct ElResult {
  double total = 0.0;
  int docs = 0;
  std::vector<ElDocEntry> per_doc;
};

ElResult empirical_likelihood_all(const ModelSnapshot& model, std::span<const Document> docs,
                                  const EvalConfig& config);

struct PerplexityDocEntry {
  std::string id;
  double log_prob = 0.0;
  int scored_tokens = 0;
  bool excluded = false;  // fewer than two tokens: nothing to score
};

struct PerplexityResult {
  double value = 0.0;
  double total_log_prob = 0.0;
  std::int64_t scored_tokens = 0;
  int excluded_docs = 0;
  std::vector<PerplexityDocEntry> per_doc;
};

/// Held-out perplexity: conditions on the first half of each document by
/// Gibbs sampling doc-topic counts with the model's word counts held fixed,
/// then scores the remaining tokens under the smoothed point estimate.
PerplexityResult perplexity(const ModelSnapshot& model, std::span<const Document> docs,
                            const EvalConfig& config);

/// ln Gamma(sum a) - ln Gamma(sum a + sum n) + sum_t [ln Gamma(a_t + n_t) -
/// ln Gamma(a_t)]: the marginal likelihood of one count vector under a
/// Dirichlet-multinomial.
double dm_marginal_log_likelihood(std::span<const double> alpha,
                                  std::span<const std::int64_t> counts);

struct RankedCandidate {
  int feature;
  double score;
};

/// Ranks candidate feature indices for a document: samples
/// prediction_samples independent assignment sequences under the
/// intercept-only prior with phi fixed, pools the topic counts, and scores
/// each candidate's prior exp(lambda_t0 + lambda_tk) against them. Sorted by
/// descending score; ties broken by candidate index.
std::vector<RankedCandidate> rank_candidates(const ModelSnapshot& model, const Document& doc,
                                             std::span<const int> candidates,
                                             const EvalConfig& config);

struct ReportRow {
  double value;
  int topic;
  std::vector<std::string> top_words;
};

/// Topics sorted by the prior alpha computed from the given features, each
/// row carrying the top words of the topic.
std::vector<ReportRow> topic_prior_report(const ModelSnapshot& model,
                                          const FeatureVector& features, int top_n,
                                          int words_per_topic = 5);

/// Topics sorted by exp(lambda_t0 + lambda_tk) for one feature.
std::vector<ReportRow> ranked_topics_for_feature(const ModelSnapshot& model, int feature,
                                                 int top_n, int words_per_topic = 5);

}  // namespace dmr
