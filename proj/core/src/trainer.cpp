#include "dmr/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dmr/special_functions.hpp"

namespace dmr {

namespace {

constexpr double kDotCap = 300.0;
constexpr double kAlphaFloor = 1e-10;
// The fixed point converges linearly, so a loose per-round delta can stop
// far from the stationary point; keep the tolerance tight.
constexpr double kAlphaFixedPointTol = 1e-10;
constexpr int kAlphaFixedPointRounds = 2000;

struct DocAlpha {
  std::vector<double> alpha;
  std::vector<bool> capped;
  double sum = 0.0;
};

void compute_doc_alpha(const FeatureVector& x, std::span<const double> lambda, int topics,
                       int features, DocAlpha& out, bool* any_capped) {
  out.alpha.resize(static_cast<std::size_t>(topics));
  out.capped.assign(static_cast<std::size_t>(topics), false);
  out.sum = 0.0;
  for (int t = 0; t < topics; ++t) {
    const std::size_t base = static_cast<std::size_t>(t) * features;
    double dot = 0.0;
    for (const FeatureEntry& e : x.entries()) {
      dot += e.value * lambda[base + static_cast<std::size_t>(e.index)];
    }
    if (dot > kDotCap || dot < -kDotCap) {
      dot = std::clamp(dot, -kDotCap, kDotCap);
      out.capped[static_cast<std::size_t>(t)] = true;
      if (any_capped) *any_capped = true;
    }
    const double a = std::exp(dot);
    out.alpha[static_cast<std::size_t>(t)] = a;
    out.sum += a;
  }
}

/// Value and (optionally) gradient of the capped objective over a flat
/// lambda. The gradient treats capped alphas as constants, so it is exactly
/// the derivative of the value being returned.
double objective_impl(const TopicState& state, const Corpus& corpus,
                      std::span<const double> lambda, int topics, int features,
                      std::span<const double> variances, std::span<double> gradient,
                      bool* any_capped) {
  const bool want_gradient = !gradient.empty();
  if (want_gradient) std::fill(gradient.begin(), gradient.end(), 0.0);

  double value = 0.0;
  DocAlpha da;
  for (int d = 0; d < corpus.num_docs(); ++d) {
    const int n_d = state.doc_length(d);
    if (n_d == 0) continue;
    const Document& doc = corpus.documents[static_cast<std::size_t>(d)];
    compute_doc_alpha(doc.features, lambda, topics, features, da, any_capped);
    value += log_gamma(da.sum) - log_gamma(da.sum + n_d);
    const double base = want_gradient ? digamma(da.sum) - digamma(da.sum + n_d) : 0.0;
    std::span<const int> counts = state.doc_topic_row(d);
    for (int t = 0; t < topics; ++t) {
      const double a = da.alpha[static_cast<std::size_t>(t)];
      const int n_td = counts[static_cast<std::size_t>(t)];
      if (n_td > 0) value += log_gamma(a + n_td) - log_gamma(a);
      if (!want_gradient || da.capped[static_cast<std::size_t>(t)]) continue;
      double bracket = base;
      if (n_td > 0) bracket += digamma(a + n_td) - digamma(a);
      const double factor = a * bracket;
      const std::size_t row = static_cast<std::size_t>(t) * features;
      for (const FeatureEntry& e : doc.features.entries()) {
        gradient[row + static_cast<std::size_t>(e.index)] += e.value * factor;
      }
    }
  }

  for (int t = 0; t < topics; ++t) {
    const std::size_t row = static_cast<std::size_t>(t) * features;
    for (int k = 0; k < features; ++k) {
      const double l = lambda[row + static_cast<std::size_t>(k)];
      const double var = variances[static_cast<std::size_t>(k)];
      value -= l * l / (2.0 * var);
      if (want_gradient) gradient[row + static_cast<std::size_t>(k)] -= l / var;
    }
  }
  return value;
}

void check_dimensions(const TopicState& state, const LambdaMatrix& lambda, const Corpus& corpus,
                      std::span<const double> variances) {
  if (lambda.topics() != state.topics()) {
    throw std::invalid_argument("lambda topic dimension disagrees with state");
  }
  if (variances.size() != static_cast<std::size_t>(lambda.features())) {
    throw std::invalid_argument("one prior variance per feature required");
  }
  if (state.num_docs() != corpus.num_docs()) {
    throw std::invalid_argument("state and corpus document counts disagree");
  }
  for (double v : variances) {
    if (!(v > 0.0)) throw std::invalid_argument("prior variances must be positive");
  }
}

std::vector<DirichletPrior> all_priors(const Corpus& corpus, const LambdaMatrix& lambda) {
  std::vector<DirichletPrior> priors;
  priors.reserve(corpus.documents.size());
  for (const Document& doc : corpus.documents) {
    priors.push_back(compute_alpha(doc.features, lambda, doc.id));
  }
  return priors;
}

ModelSnapshot make_snapshot(ModelSnapshot::Kind kind, const TrainConfig& config,
                            const Vocabulary& vocabulary, const FeatureDictionary& features,
                            const TopicState& state, LambdaMatrix lambda,
                            std::vector<TraceEntry> trace, TrainWarnings warnings) {
  ModelSnapshot snap;
  snap.kind = kind;
  snap.config = config;
  snap.vocabulary = vocabulary;
  snap.features = features;
  snap.lambda = std::move(lambda);
  snap.trace = std::move(trace);
  snap.warnings = warnings;
  const int T = state.topics();
  const int V = state.vocab();
  snap.topic_word.assign(static_cast<std::size_t>(T) * static_cast<std::size_t>(V), 0);
  snap.topic_totals.assign(static_cast<std::size_t>(T), 0);
  for (int t = 0; t < T; ++t) {
    snap.topic_totals[static_cast<std::size_t>(t)] = state.topic_total(t);
    for (int w = 0; w < V; ++w) {
      snap.topic_word[static_cast<std::size_t>(t) * V + w] = state.word_topic(w, t);
    }
  }
  return snap;
}

/// Dirichlet-multinomial likelihood of the current doc-topic counts under a
/// shared alpha; the LDA analogue of the trace quantity.
double shared_alpha_log_likelihood(const TopicState& state, std::span<const double> alpha) {
  double A = 0.0;
  for (double a : alpha) A += a;
  double value = 0.0;
  for (int d = 0; d < state.num_docs(); ++d) {
    const int n_d = state.doc_length(d);
    if (n_d == 0) continue;
    value += log_gamma(A) - log_gamma(A + n_d);
    std::span<const int> counts = state.doc_topic_row(d);
    for (int t = 0; t < state.topics(); ++t) {
      const int n_td = counts[static_cast<std::size_t>(t)];
      if (n_td > 0) {
        const double a = alpha[static_cast<std::size_t>(t)];
        value += log_gamma(a + n_td) - log_gamma(a);
      }
    }
  }
  return value;
}

bool optimize_now(const TrainConfig& config, int iteration) {
  return iteration >= config.burn_in &&
         (iteration - config.burn_in) % config.optimize_interval == 0;
}

std::string format_round(const char* label, int iteration, double before, double after,
                         bool final_extra) {
  std::ostringstream os;
  os << label << " iteration " << iteration << ": log likelihood " << before << " -> " << after;
  if (final_extra) os << " (final unscheduled optimization)";
  return os.str();
}

}  // namespace

void TrainConfig::validate() const {
  if (topics < 1) throw std::invalid_argument("topics must be at least 1");
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (!(sigma_default > 0.0) || !(sigma_other > 0.0)) {
    throw std::invalid_argument("prior variances must be positive");
  }
  if (iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  if (burn_in < 0) throw std::invalid_argument("burn-in must be nonnegative");
  if (burn_in >= iterations) throw std::invalid_argument("burn-in must be below iterations");
  if (optimize_interval < 1) throw std::invalid_argument("optimize interval must be at least 1");
}

double dmr_log_likelihood(const TopicState& state, const LambdaMatrix& lambda,
                          const Corpus& corpus, std::span<const double> variances, bool* capped) {
  check_dimensions(state, lambda, corpus, variances);
  return objective_impl(state, corpus, lambda.data(), lambda.topics(), lambda.features(),
                        variances, {}, capped);
}

LambdaMatrix dmr_gradient(const TopicState& state, const LambdaMatrix& lambda,
                          const Corpus& corpus, std::span<const double> variances, bool* capped) {
  check_dimensions(state, lambda, corpus, variances);
  LambdaMatrix gradient(lambda.topics(), lambda.features());
  objective_impl(state, corpus, lambda.data(), lambda.topics(), lambda.features(), variances,
                 gradient.data(), capped);
  return gradient;
}

LambdaMatrix optimize_lambda(const TopicState& state, const LambdaMatrix& lambda,
                             const Corpus& corpus, const TrainConfig& config,
                             TrainWarnings* warnings) {
  const std::vector<double>& variances = corpus.features.variances();
  check_dimensions(state, lambda, corpus, variances);
  const int T = lambda.topics();
  const int K = lambda.features();
  bool capped = false;
  Objective negated = [&](std::span<const double> x, std::span<double> g) {
    const double value = objective_impl(state, corpus, x, T, K, variances, g, &capped);
    for (double& gi : g) gi = -gi;
    return -value;
  };
  MinimizeResult result = minimize(negated, lambda.data(), config.optimizer);
  if (warnings) {
    warnings->alpha_capped = warnings->alpha_capped || capped;
    warnings->line_search_failed = warnings->line_search_failed || result.line_search_failed;
  }
  LambdaMatrix out(T, K);
  out.data() = std::move(result.x);
  return out;
}

ModelSnapshot train_dmr(Corpus corpus, const TrainConfig& config) {
  config.validate();
  if (corpus.documents.empty()) throw std::invalid_argument("corpus is empty");
  corpus.features.set_variances(config.sigma_default, config.sigma_other);
  const std::vector<double>& variances = corpus.features.variances();

  TopicState state(corpus, config.topics, config.seed);
  LambdaMatrix lambda(config.topics, corpus.features.size());
  std::vector<DirichletPrior> priors = all_priors(corpus, lambda);
  std::vector<TraceEntry> trace;
  TrainWarnings warnings;

  auto m_step = [&](int iteration, bool final_extra) {
    const double before = dmr_log_likelihood(state, lambda, corpus, variances);
    lambda = optimize_lambda(state, lambda, corpus, config, &warnings);
    const double after = dmr_log_likelihood(state, lambda, corpus, variances);
    trace.push_back(TraceEntry{iteration, before, after});
    priors = all_priors(corpus, lambda);
    if (config.log) config.log(format_round("dmr", iteration, before, after, final_extra));
  };

  int last_optimized = 0;
  for (int iteration = 1; iteration <= config.iterations; ++iteration) {
    gibbs_sweep(state, priors, config.beta);
    if (optimize_now(config, iteration)) {
      m_step(iteration, false);
      last_optimized = iteration;
    }
  }
  if (last_optimized != config.iterations) m_step(config.iterations, true);

  return make_snapshot(ModelSnapshot::Kind::dmr, config, corpus.vocabulary, corpus.features,
                       state, std::move(lambda), std::move(trace), warnings);
}

std::vector<double> optimize_lda_alpha(const TopicState& state, std::vector<double> alpha) {
  if (alpha.size() != static_cast<std::size_t>(state.topics())) {
    throw std::invalid_argument("one alpha per topic required");
  }
  for (double a : alpha) {
    if (!(a > 0.0)) throw std::invalid_argument("alpha entries must be positive");
  }
  if (state.total_tokens() == 0) return alpha;

  std::vector<double> updated(alpha.size());
  for (int round = 0; round < kAlphaFixedPointRounds; ++round) {
    double A = 0.0;
    for (double a : alpha) A += a;
    double denom = 0.0;
    for (int d = 0; d < state.num_docs(); ++d) {
      const int n_d = state.doc_length(d);
      if (n_d > 0) denom += digamma(A + n_d) - digamma(A);
    }
    if (!(denom > 0.0)) break;
    double max_delta = 0.0;
    for (int t = 0; t < state.topics(); ++t) {
      const double a = alpha[static_cast<std::size_t>(t)];
      double num = 0.0;
      for (int d = 0; d < state.num_docs(); ++d) {
        const int n_td = state.doc_topic(d, t);
        if (n_td > 0) num += digamma(a + n_td) - digamma(a);
      }
      const double next = std::max(a * num / denom, kAlphaFloor);
      max_delta = std::max(max_delta, std::abs(next - a));
      updated[static_cast<std::size_t>(t)] = next;
    }
    alpha.swap(updated);
    if (max_delta < kAlphaFixedPointTol) break;
  }
  return alpha;
}

ModelSnapshot train_lda(Corpus corpus, const TrainConfig& config) {
  config.validate();
  if (corpus.documents.empty()) throw std::invalid_argument("corpus is empty");

  TopicState state(corpus, config.topics, config.seed);
  std::vector<double> alpha(static_cast<std::size_t>(config.topics), 1.0);
  std::vector<TraceEntry> trace;

  auto shared_priors = [&] {
    DirichletPrior prior;
    prior.alpha = alpha;
    prior.sum = 0.0;
    for (double a : alpha) prior.sum += a;
    return std::vector<DirichletPrior>(corpus.documents.size(), prior);
  };
  std::vector<DirichletPrior> priors = shared_priors();

  auto m_step = [&](int iteration, bool final_extra) {
    const double before = shared_alpha_log_likelihood(state, alpha);
    alpha = optimize_lda_alpha(state, std::move(alpha));
    const double after = shared_alpha_log_likelihood(state, alpha);
    trace.push_back(TraceEntry{iteration, before, after});
    priors = shared_priors();
    if (config.log) config.log(format_round("lda", iteration, before, after, final_extra));
  };

  int last_optimized = 0;
  for (int iteration = 1; iteration <= config.iterations; ++iteration) {
    gibbs_sweep(state, priors, config.beta);
    if (optimize_now(config, iteration)) {
      m_step(iteration, false);
      last_optimized = iteration;
    }
  }
  if (last_optimized != config.iterations) m_step(config.iterations, true);

  LambdaMatrix lambda(config.topics, 1);
  for (int t = 0; t < config.topics; ++t) {
    lambda.at(t, 0) = std::log(alpha[static_cast<std::size_t>(t)]);
  }
  FeatureDictionary intercept_only;
  intercept_only.set_variances(config.sigma_default, config.sigma_other);
  return make_snapshot(ModelSnapshot::Kind::lda, config, corpus.vocabulary, intercept_only,
                       state, std::move(lambda), std::move(trace), TrainWarnings{});
}

}  // namespace dmr
