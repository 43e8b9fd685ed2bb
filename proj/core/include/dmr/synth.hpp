#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmr/corpus.hpp"
#include "dmr/lambda_matrix.hpp"

namespace dmr {

/// Synthetic-corpus generator: fixes lambda*, draws per-topic word
/// distributions, then samples every document from the model's generative
/// process (prior from features, topic mixture, assignments, words).
struct SynthConfig {
  int docs = 200;
  int topics = 5;
  int vocab = 50;
  int authors = 4;
  int doc_len = 60;
  std::string kind = "authors";  // "authors" | "dates"
  double strength = 2.5;         // feature weight separating topics
  double intercept = 0.0;        // shared intercept weight
  double phi_concentration = 0.1;
  std::uint64_t seed = 7;
  int min_date = 1987;  // dates kind: generated date range
  int max_date = 2007;
  double epsilon = 1e-3;

  void validate() const;  // throws std::invalid_argument
};

struct SynthOutput {
  std::vector<RawRecord> records;
  std::vector<std::string> vocabulary;     // generator token order
  std::vector<std::string> feature_names;  // intercept first
  LambdaMatrix lambda_true;
  std::vector<double> phi_true;  // row-major topics x vocab, generator order
  std::vector<std::vector<double>> alpha_true;
  std::vector<std::vector<int>> z_true;
};

SynthOutput generate_synthetic(const SynthConfig& config);

/// The records as a corpus file (JSON lines).
std::string synth_corpus_jsonl(const SynthOutput& output);
/// Ground truth (lambda*, phi*, per-document alpha* and assignments) as JSON.
std::string synth_truth_json(const SynthConfig& config, const SynthOutput& output);

}  // namespace dmr
