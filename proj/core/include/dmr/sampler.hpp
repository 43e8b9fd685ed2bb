#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dmr/corpus.hpp"
#include "dmr/lambda_matrix.hpp"
#include "dmr/rng.hpp"

namespace dmr {

/// Per-document Dirichlet prior over topics.
struct DirichletPrior {
  std::vector<double> alpha;
  double sum = 0.0;
};

/// alpha_t = exp(x . lambda_t) for every topic. Throws when a dot product
/// exceeds 700 (exp would overflow); doc_label names the document in the
/// error message.
DirichletPrior compute_alpha(const FeatureVector& x, const LambdaMatrix& lambda,
                             const std::string& doc_label = {});

/// Topic assignments plus the count tables the collapsed sampler maintains.
/// Holds a pointer to the corpus it was built from; the corpus must outlive
/// the state and stay unmodified.
class TopicState {
 public:
  TopicState(const Corpus& corpus, int topics, std::uint64_t seed);

  int topics() const { return topics_; }
  int vocab() const { return vocab_; }
  int num_docs() const { return static_cast<int>(z_.size()); }
  int doc_length(int d) const { return static_cast<int>(z_[static_cast<std::size_t>(d)].size()); }
  std::size_t total_tokens() const { return total_tokens_; }

  int assignment(int d, int i) const { return z_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]; }
  int doc_topic(int d, int t) const { return doc_topic_[static_cast<std::size_t>(d) * topics_ + t]; }
  int word_topic(int w, int t) const { return word_topic_[static_cast<std::size_t>(w) * topics_ + t]; }
  int topic_total(int t) const { return topic_total_[static_cast<std::size_t>(t)]; }
  std::span<const int> doc_topic_row(int d) const {
    return std::span<const int>(doc_topic_).subspan(static_cast<std::size_t>(d) * topics_, topics_);
  }
  std::span<const int> word_topic_row(int w) const {
    return std::span<const int>(word_topic_).subspan(static_cast<std::size_t>(w) * topics_, topics_);
  }

  /// Unassigns token i of document d, decrementing its counts.
  void remove(int d, int i);
  /// Assigns token i of document d to topic t, incrementing counts. The
  /// token must currently be unassigned.
  void assign(int d, int i, int t);

  Rng& rng() { return rng_; }
  const Corpus& corpus() const { return *corpus_; }

  /// Throws when any count table disagrees with the assignments.
  void check_consistency() const;

 private:
  const Corpus* corpus_;
  int topics_;
  int vocab_;
  std::size_t total_tokens_ = 0;
  std::vector<std::vector<int>> z_;
  std::vector<int> doc_topic_;
  std::vector<int> word_topic_;
  std::vector<int> topic_total_;
  Rng rng_;
};

/// Uniformly random initial assignments with consistent count tables.
TopicState init_assignments(const Corpus& corpus, int topics, std::uint64_t seed);

/// Collapsed conditional p(z = t) for token i of document d, which must be
/// unassigned: proportional to (n_td + alpha_t)(n_wt + beta)/(n_t + V beta).
/// Returns a normalized probability vector.
std::vector<double> conditional_distribution(const TopicState& state, int d, int i,
                                             const DirichletPrior& prior, double beta);

/// One full Gibbs sweep: resamples every token in document order, token
/// order. priors has one entry per document.
void gibbs_sweep(TopicState& state, std::span<const DirichletPrior> priors, double beta);

enum class PhiSmoothing {
  vocabulary,   // (n_wt + beta)/(n_t + V beta), rows sum to 1
  topic_count,  // (n_wt + beta)/(n_t + T beta); rows are unnormalized unless V = T
};

struct TopicWordTable {
  int topics = 0;
  int vocab = 0;
  std::vector<double> probs;  // row-major topics x vocab

  double at(int t, int w) const {
    return probs[static_cast<std::size_t>(t) * vocab + w];
  }
  std::span<const double> row(int t) const {
    return std::span<const double>(probs).subspan(static_cast<std::size_t>(t) * vocab, vocab);
  }
};

TopicWordTable estimate_phi(std::span<const std::int64_t> topic_word,
                            std::span<const std::int64_t> topic_totals, int topics, int vocab,
                            double beta, PhiSmoothing smoothing = PhiSmoothing::vocabulary);
TopicWordTable estimate_phi(const TopicState& state, double beta,
                            PhiSmoothing smoothing = PhiSmoothing::vocabulary);

}  // namespace dmr
