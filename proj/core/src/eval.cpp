#include "dmr/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dmr/digest.hpp"
#include "dmr/special_functions.hpp"

namespace dmr {

namespace {

Rng doc_rng(const EvalConfig& config, const std::string& doc_id) {
  return Rng(config.seed).derive(fnv1a_64(doc_id));
}

void check_tokens(const Document& doc, int vocab) {
  for (int w : doc.tokens) {
    if (w < 0 || w >= vocab) {
      throw std::invalid_argument("document token outside the model vocabulary");
    }
  }
}

}  // namespace

void EvalConfig::validate() const {
  if (el_samples < 1) throw std::invalid_argument("el_samples must be at least 1");
  if (conditioning_sweeps < 1) throw std::invalid_argument("conditioning_sweeps must be at least 1");
  if (conditioning_burn_in < 0) throw std::invalid_argument("conditioning_burn_in must be nonnegative");
  if (prediction_samples < 1) throw std::invalid_argument("prediction_samples must be at least 1");
}

TopicWordTable model_phi(const ModelSnapshot& model) {
  return estimate_phi(model.topic_word, model.topic_totals, model.lambda.topics(),
                      model.vocabulary.size(), model.config.beta, model.config.smoothing);
}

DirichletPrior document_prior(const ModelSnapshot& model, const FeatureVector& features) {
  return compute_alpha(features, model.lambda);
}

namespace {

double empirical_likelihood_impl(const TopicWordTable& phi, const DirichletPrior& prior,
                                 const Document& doc, const EvalConfig& config, Rng rng) {
  if (doc.tokens.empty()) return 0.0;
  const int T = phi.topics;
  std::vector<double> theta(static_cast<std::size_t>(T));
  std::vector<double> sample_logs(static_cast<std::size_t>(config.el_samples));
  for (int s = 0; s < config.el_samples; ++s) {
    rng.dirichlet(prior.alpha, theta);
    double log_prod = 0.0;
    for (int w : doc.tokens) {
      double p = 0.0;
      for (int t = 0; t < T; ++t) {
        p += theta[static_cast<std::size_t>(t)] * phi.at(t, w);
      }
      log_prod += std::log(p);
    }
    sample_logs[static_cast<std::size_t>(s)] = log_prod;
  }
  return log_sum_exp(sample_logs) - std::log(static_cast<double>(config.el_samples));
}

}  // namespace

double empirical_likelihood(const ModelSnapshot& model, const Document& doc,
                            const EvalConfig& config) {
  config.validate();
  check_tokens(doc, model.vocabulary.size());
  const TopicWordTable phi = model_phi(model);
  const DirichletPrior prior = document_prior(model, doc.features);
  return empirical_likelihood_impl(phi, prior, doc, config, doc_rng(config, doc.id));
}

ElResult empirical_likelihood_all(const ModelSnapshot& model, std::span<const Document> docs,
                                  const EvalConfig& config) {
  config.validate();
  const TopicWordTable phi = model_phi(model);
  ElResult result;
  for (const Document& doc : docs) {
    check_tokens(doc, model.vocabulary.size());
    const DirichletPrior prior = document_prior(model, doc.features);
    const double ll = empirical_likelihood_impl(phi, prior, doc, config, doc_rng(config, doc.id));
    result.per_doc.push_back(ElDocEntry{doc.id, ll, doc.length()});
    result.total += ll;
    ++result.docs;
  }
  return result;
}

PerplexityResult perplexity(const ModelSnapshot& model, std::span<const Document> docs,
                            const EvalConfig& config) {
  config.validate();
  if (docs.empty()) throw std::invalid_argument("perplexity requires at least one document");
  const TopicWordTable phi = model_phi(model);
  const int T = phi.topics;

  PerplexityResult result;
  std::vector<double> weights(static_cast<std::size_t>(T));
  std::vector<int> counts(static_cast<std::size_t>(T));
  std::vector<int> z;
  for (const Document& doc : docs) {
    check_tokens(doc, model.vocabulary.size());
    PerplexityDocEntry entry;
    entry.id = doc.id;
    const int n = doc.length();
    if (n < 2) {
      entry.excluded = true;
      ++result.excluded_docs;
      result.per_doc.push_back(std::move(entry));
      continue;
    }
    const DirichletPrior prior = document_prior(model, doc.features);
    Rng rng = doc_rng(config, doc.id);
    const int half = (n + 1) / 2;

    // Sequentially seed the conditioning half, then sweep it with the
    // model's word counts fixed.
    std::fill(counts.begin(), counts.end(), 0);
    z.assign(static_cast<std::size_t>(half), -1);
    auto draw = [&](int w) {
      for (int t = 0; t < T; ++t) {
        weights[static_cast<std::size_t>(t)] =
            (counts[static_cast<std::size_t>(t)] + prior.alpha[static_cast<std::size_t>(t)]) *
            phi.at(t, w);
      }
      return rng.discrete(weights);
    };
    for (int i = 0; i < half; ++i) {
      const int t = draw(doc.tokens[static_cast<std::size_t>(i)]);
      z[static_cast<std::size_t>(i)] = t;
      ++counts[static_cast<std::size_t>(t)];
    }
    const int total_sweeps = config.conditioning_burn_in + config.conditioning_sweeps;
    for (int sweep = 0; sweep < total_sweeps; ++sweep) {
      for (int i = 0; i < half; ++i) {
        --counts[static_cast<std::size_t>(z[static_cast<std::size_t>(i)])];
        const int t = draw(doc.tokens[static_cast<std::size_t>(i)]);
        z[static_cast<std::size_t>(i)] = t;
        ++counts[static_cast<std::size_t>(t)];
      }
    }

    // Point estimate of the topic mixture from the final counts, smoothed by
    // the document prior.
    const double denom = static_cast<double>(half) + prior.sum;
    for (int i = half; i < n; ++i) {
      const int w = doc.tokens[static_cast<std::size_t>(i)];
      double p = 0.0;
      for (int t = 0; t < T; ++t) {
        const double theta =
            (counts[static_cast<std::size_t>(t)] + prior.alpha[static_cast<std::size_t>(t)]) / denom;
        p += theta * phi.at(t, w);
      }
      entry.log_prob += std::log(p);
    }
    entry.scored_tokens = n - half;
    result.total_log_prob += entry.log_prob;
    result.scored_tokens += entry.scored_tokens;
    result.per_doc.push_back(std::move(entry));
  }
  if (result.scored_tokens == 0) {
    throw std::invalid_argument("perplexity scored no tokens (all documents too short)");
  }
  result.value = std::exp(-result.total_log_prob / static_cast<double>(result.scored_tokens));
  return result;
}

double dm_marginal_log_likelihood(std::span<const double> alpha,
                                  std::span<const std::int64_t> counts) {
  if (alpha.size() != counts.size()) {
    throw std::invalid_argument("alpha and counts must have equal length");
  }
  double A = 0.0;
  for (double a : alpha) {
    if (!(a > 0.0)) throw std::invalid_argument("alpha entries must be positive");
    A += a;
  }
  std::int64_t N = 0;
  for (std::int64_t n : counts) {
    if (n < 0) throw std::invalid_argument("counts must be nonnegative");
    N += n;
  }
  double value = log_gamma(A) - log_gamma(A + static_cast<double>(N));
  for (std::size_t t = 0; t < counts.size(); ++t) {
    if (counts[t] > 0) {
      value += log_gamma(alpha[t] + static_cast<double>(counts[t])) - log_gamma(alpha[t]);
    }
  }
  return value;
}

std::vector<RankedCandidate> rank_candidates(const ModelSnapshot& model, const Document& doc,
                                             std::span<const int> candidates,
                                             const EvalConfig& config) {
  config.validate();
  if (candidates.empty()) throw std::invalid_argument("candidate list is empty");
  const int K = model.lambda.features();
  for (int c : candidates) {
    if (c < 1 || c >= K) throw std::invalid_argument("candidate index outside the feature space");
  }
  check_tokens(doc, model.vocabulary.size());

  const TopicWordTable phi = model_phi(model);
  const int T = phi.topics;
  std::vector<double> base_alpha(static_cast<std::size_t>(T));
  for (int t = 0; t < T; ++t) base_alpha[static_cast<std::size_t>(t)] = std::exp(model.lambda.at(t, 0));

  // Pool topic counts across independent assignment sequences drawn under
  // the intercept-only prior.
  Rng rng = doc_rng(config, doc.id);
  std::vector<std::int64_t> pooled(static_cast<std::size_t>(T), 0);
  std::vector<int> counts(static_cast<std::size_t>(T));
  std::vector<double> weights(static_cast<std::size_t>(T));
  for (int s = 0; s < config.prediction_samples; ++s) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int w : doc.tokens) {
      for (int t = 0; t < T; ++t) {
        weights[static_cast<std::size_t>(t)] =
            (counts[static_cast<std::size_t>(t)] + base_alpha[static_cast<std::size_t>(t)]) *
            phi.at(t, w);
      }
      ++counts[static_cast<std::size_t>(rng.discrete(weights))];
    }
    for (int t = 0; t < T; ++t) pooled[static_cast<std::size_t>(t)] += counts[static_cast<std::size_t>(t)];
  }

  std::vector<RankedCandidate> ranked;
  ranked.reserve(candidates.size());
  std::vector<double> cand_alpha(static_cast<std::size_t>(T));
  for (int c : candidates) {
    for (int t = 0; t < T; ++t) {
      cand_alpha[static_cast<std::size_t>(t)] = std::exp(model.lambda.at(t, 0) + model.lambda.at(t, c));
    }
    ranked.push_back(RankedCandidate{c, dm_marginal_log_likelihood(cand_alpha, pooled)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.feature < b.feature;
  });
  return ranked;
}

namespace {

std::vector<std::string> top_words(const ModelSnapshot& model, const TopicWordTable& phi, int t,
                                   int count) {
  const int V = phi.vocab;
  std::vector<int> order(static_cast<std::size_t>(V));
  for (int w = 0; w < V; ++w) order[static_cast<std::size_t>(w)] = w;
  const int keep = std::min(count, V);
  std::partial_sort(order.begin(), order.begin() + keep, order.end(), [&](int a, int b) {
    const double pa = phi.at(t, a);
    const double pb = phi.at(t, b);
    if (pa != pb) return pa > pb;
    return a < b;
  });
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(keep));
  for (int i = 0; i < keep; ++i) {
    words.push_back(model.vocabulary.token(order[static_cast<std::size_t>(i)]));
  }
  return words;
}

std::vector<ReportRow> ranked_rows(const ModelSnapshot& model, std::span<const double> values,
                                   int top_n, int words_per_topic) {
  if (top_n < 0) throw std::invalid_argument("top_n must be nonnegative");
  const TopicWordTable phi = model_phi(model);
  const int T = phi.topics;
  std::vector<int> order(static_cast<std::size_t>(T));
  for (int t = 0; t < T; ++t) order[static_cast<std::size_t>(t)] = t;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (values[static_cast<std::size_t>(a)] != values[static_cast<std::size_t>(b)]) {
      return values[static_cast<std::size_t>(a)] > values[static_cast<std::size_t>(b)];
    }
    return a < b;
  });
  std::vector<ReportRow> rows;
  const int keep = std::min(top_n, T);
  rows.reserve(static_cast<std::size_t>(keep));
  for (int i = 0; i < keep; ++i) {
    const int t = order[static_cast<std::size_t>(i)];
    rows.push_back(ReportRow{values[static_cast<std::size_t>(t)], t,
                             top_words(model, phi, t, words_per_topic)});
  }
  return rows;
}

}  // namespace

std::vector<ReportRow> topic_prior_report(const ModelSnapshot& model,
                                          const FeatureVector& features, int top_n,
                                          int words_per_topic) {
  const DirichletPrior prior = document_prior(model, features);
  return ranked_rows(model, prior.alpha, top_n, words_per_topic);
}

std::vector<ReportRow> ranked_topics_for_feature(const ModelSnapshot& model, int feature,
                                                 int top_n, int words_per_topic) {
  if (feature < 0 || feature >= model.lambda.features()) {
    throw std::invalid_argument("feature index outside the model");
  }
  const int T = model.lambda.topics();
  std::vector<double> values(static_cast<std::size_t>(T));
  for (int t = 0; t < T; ++t) {
    values[static_cast<std::size_t>(t)] = std::exp(model.lambda.at(t, 0) + model.lambda.at(t, feature));
  }
  return ranked_rows(model, values, top_n, words_per_topic);
}

}  // namespace dmr
