#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmr/corpus.hpp"
#include "dmr/eval.hpp"
#include "dmr/trainer.hpp"

namespace dmr {

/// Raw-record filtering plus the feature encoders applied to a training set.
struct EncoderOptions {
  std::vector<std::string> features;  // subset of {"authors", "citations", "dates"}
  int min_papers = 5;
  int min_citations = 10;
  double date_epsilon = 1e-3;
  std::optional<int> min_date;
  std::vector<std::string> require;  // modalities a document must carry
  IngestOptions ingest;

  void validate() const;  // throws std::invalid_argument
};

/// Date and modality filters at the record level, before tokenization.
std::vector<RawRecord> filter_records(std::vector<RawRecord> records,
                                      const EncoderOptions& options);

/// Tokenizes the records and applies the configured encoders.
Corpus encode_corpus(const std::vector<RawRecord>& records, const EncoderOptions& options);

struct CvOptions {
  int folds = 10;
  int seeds = 5;  // random initializations per fold
  std::uint64_t shuffle_seed = 0;
  int jobs = 1;
  std::vector<std::string> models = {"dmr", "lda"};
  TrainConfig train;  // seed is the base for per-run derivation
  EvalConfig eval;
  EncoderOptions encoder;

  void validate() const;
};

struct CvRun {
  std::string model;
  int fold = 0;
  int seed_index = 0;
  std::uint64_t train_seed = 0;
  double perplexity = 0.0;
  double el_total = 0.0;
  double el_mean = 0.0;
  std::int64_t scored_tokens = 0;
  int excluded_docs = 0;
  int dropped_tokens = 0;  // held-out tokens absent from the fold vocabulary
  int held_out_docs = 0;
};

struct CvOutcome {
  std::vector<int> fold_of_doc;  // indexed in filtered-record order
  std::vector<CvRun> runs;       // model-major, then fold, then seed
};

/// Deterministic cross validation: seeded shuffle, contiguous folds, a fresh
/// vocabulary and feature space per fold built from its training split, and
/// independently seeded runs. `jobs` bounds concurrent runs; results are
/// merged in run order regardless of scheduling.
CvOutcome run_cv(const std::vector<RawRecord>& records, const CvOptions& options);

/// Fold index per shuffled position, sizes differing by at most one.
std::vector<int> assign_folds(std::size_t count, int folds, std::uint64_t shuffle_seed);

/// DMR_JOBS environment variable, defaulting to 1.
int default_jobs();

}  // namespace dmr
