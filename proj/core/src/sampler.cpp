#include "dmr/sampler.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dmr {

DirichletPrior compute_alpha(const FeatureVector& x, const LambdaMatrix& lambda,
                             const std::string& doc_label) {
  DirichletPrior prior;
  prior.alpha.resize(static_cast<std::size_t>(lambda.topics()));
  for (int t = 0; t < lambda.topics(); ++t) {
    double dot = 0.0;
    for (const FeatureEntry& e : x.entries()) {
      if (e.index >= lambda.features()) {
        throw std::invalid_argument("feature index outside lambda dimensions");
      }
      dot += e.value * lambda.at(t, e.index);
    }
    if (dot > 700.0) {
      std::ostringstream os;
      os << "prior overflow: exp(" << dot << ") at topic " << t;
      if (!doc_label.empty()) os << ", document " << doc_label;
      throw std::overflow_error(os.str());
    }
    const double a = std::exp(dot);
    prior.alpha[static_cast<std::size_t>(t)] = a;
    prior.sum += a;
  }
  return prior;
}

TopicState::TopicState(const Corpus& corpus, int topics, std::uint64_t seed)
    : corpus_(&corpus),
      topics_(topics),
      vocab_(corpus.vocabulary.size()),
      rng_(seed) {
  if (topics < 1) throw std::invalid_argument("topic count must be at least 1");
  const std::size_t docs = corpus.documents.size();
  z_.resize(docs);
  doc_topic_.assign(docs * static_cast<std::size_t>(topics_), 0);
  word_topic_.assign(static_cast<std::size_t>(vocab_) * topics_, 0);
  topic_total_.assign(static_cast<std::size_t>(topics_), 0);
  for (std::size_t d = 0; d < docs; ++d) {
    const Document& doc = corpus.documents[d];
    z_[d].assign(doc.tokens.size(), -1);
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
      assign(static_cast<int>(d), static_cast<int>(i), rng_.uniform_int(topics_));
    }
    total_tokens_ += doc.tokens.size();
  }
}

void TopicState::remove(int d, int i) {
  int& zi = z_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
  if (zi < 0) throw std::logic_error("token already unassigned");
  const int w = corpus_->documents[static_cast<std::size_t>(d)].tokens[static_cast<std::size_t>(i)];
  --doc_topic_[static_cast<std::size_t>(d) * topics_ + zi];
  --word_topic_[static_cast<std::size_t>(w) * topics_ + zi];
  --topic_total_[static_cast<std::size_t>(zi)];
  zi = -1;
}

void TopicState::assign(int d, int i, int t) {
  if (t < 0 || t >= topics_) throw std::invalid_argument("topic out of range");
  int& zi = z_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
  if (zi >= 0) throw std::logic_error("token already assigned");
  const int w = corpus_->documents[static_cast<std::size_t>(d)].tokens[static_cast<std::size_t>(i)];
  ++doc_topic_[static_cast<std::size_t>(d) * topics_ + t];
  ++word_topic_[static_cast<std::size_t>(w) * topics_ + t];
  ++topic_total_[static_cast<std::size_t>(t)];
  zi = t;
}

void TopicState::check_consistency() const {
  std::vector<int> doc_topic(doc_topic_.size(), 0);
  std::vector<int> word_topic(word_topic_.size(), 0);
  std::vector<int> topic_total(topic_total_.size(), 0);
  for (std::size_t d = 0; d < z_.size(); ++d) {
    const Document& doc = corpus_->documents[d];
    for (std::size_t i = 0; i < z_[d].size(); ++i) {
      const int t = z_[d][i];
      if (t < 0) continue;
      ++doc_topic[d * topics_ + t];
      ++word_topic[static_cast<std::size_t>(doc.tokens[i]) * topics_ + t];
      ++topic_total[static_cast<std::size_t>(t)];
    }
  }
  if (doc_topic != doc_topic_ || word_topic != word_topic_ || topic_total != topic_total_) {
    throw std::logic_error("count tables disagree with assignments");
  }
}

TopicState init_assignments(const Corpus& corpus, int topics, std::uint64_t seed) {
  return TopicState(corpus, topics, seed);
}

namespace {

/// Unnormalized collapsed conditional for word w in document d; the token
/// must already be removed from the counts.
void conditional_weights(const TopicState& state, int d, int w, const DirichletPrior& prior,
                         double beta, std::span<double> out) {
  const int T = state.topics();
  const double vbeta = static_cast<double>(state.vocab()) * beta;
  std::span<const int> doc_row = state.doc_topic_row(d);
  std::span<const int> word_row = state.word_topic_row(w);
  for (int t = 0; t < T; ++t) {
    out[static_cast<std::size_t>(t)] =
        (doc_row[static_cast<std::size_t>(t)] + prior.alpha[static_cast<std::size_t>(t)]) *
        (word_row[static_cast<std::size_t>(t)] + beta) / (state.topic_total(t) + vbeta);
  }
}

}  // namespace

std::vector<double> conditional_distribution(const TopicState& state, int d, int i,
                                             const DirichletPrior& prior, double beta) {
  if (state.assignment(d, i) >= 0) {
    throw std::logic_error("conditional_distribution requires the token to be removed");
  }
  const int w = state.corpus().documents[static_cast<std::size_t>(d)].tokens[static_cast<std::size_t>(i)];
  std::vector<double> p(static_cast<std::size_t>(state.topics()));
  conditional_weights(state, d, w, prior, beta, p);
  double total = 0.0;
  for (double v : p) total += v;
  for (double& v : p) v /= total;
  return p;
}

void gibbs_sweep(TopicState& state, std::span<const DirichletPrior> priors, double beta) {
  if (priors.size() != static_cast<std::size_t>(state.num_docs())) {
    throw std::invalid_argument("one prior per document required");
  }
  std::vector<double> weights(static_cast<std::size_t>(state.topics()));
  for (int d = 0; d < state.num_docs(); ++d) {
    const Document& doc = state.corpus().documents[static_cast<std::size_t>(d)];
    const DirichletPrior& prior = priors[static_cast<std::size_t>(d)];
    for (int i = 0; i < doc.length(); ++i) {
      state.remove(d, i);
      conditional_weights(state, d, doc.tokens[static_cast<std::size_t>(i)], prior, beta, weights);
      state.assign(d, i, state.rng().discrete(weights));
    }
  }
}

TopicWordTable estimate_phi(std::span<const std::int64_t> topic_word,
                            std::span<const std::int64_t> topic_totals, int topics, int vocab,
                            double beta, PhiSmoothing smoothing) {
  if (topic_word.size() != static_cast<std::size_t>(topics) * static_cast<std::size_t>(vocab) ||
      topic_totals.size() != static_cast<std::size_t>(topics)) {
    throw std::invalid_argument("count table dimensions mismatch");
  }
  TopicWordTable table;
  table.topics = topics;
  table.vocab = vocab;
  table.probs.resize(topic_word.size());
  const double denom_add =
      beta * (smoothing == PhiSmoothing::vocabulary ? static_cast<double>(vocab)
                                                    : static_cast<double>(topics));
  for (int t = 0; t < topics; ++t) {
    const double denom = static_cast<double>(topic_totals[static_cast<std::size_t>(t)]) + denom_add;
    for (int w = 0; w < vocab; ++w) {
      const std::size_t idx = static_cast<std::size_t>(t) * vocab + w;
      table.probs[idx] = (static_cast<double>(topic_word[idx]) + beta) / denom;
    }
  }
  return table;
}

TopicWordTable estimate_phi(const TopicState& state, double beta, PhiSmoothing smoothing) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(state.topics()) * state.vocab());
  std::vector<std::int64_t> totals(static_cast<std::size_t>(state.topics()));
  for (int t = 0; t < state.topics(); ++t) {
    totals[static_cast<std::size_t>(t)] = state.topic_total(t);
    for (int w = 0; w < state.vocab(); ++w) {
      counts[static_cast<std::size_t>(t) * state.vocab() + w] = state.word_topic(w, t);
    }
  }
  return estimate_phi(counts, totals, state.topics(), state.vocab(), beta, smoothing);
}

}  // namespace dmr
