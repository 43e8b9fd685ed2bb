#include "dmr/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dmr/rng.hpp"

namespace dmr {

namespace {

bool known_modality(const std::string& name) {
  return name == "authors" || name == "citations" || name == "dates";
}

}  // namespace

void EncoderOptions::validate() const {
  for (const std::string& f : features) {
    if (!known_modality(f)) throw std::invalid_argument("unknown feature family: " + f);
  }
  for (const std::string& r : require) {
    if (!known_modality(r)) throw std::invalid_argument("unknown modality: " + r);
  }
  if (min_papers < 1) throw std::invalid_argument("min papers must be at least 1");
  if (min_citations < 1) throw std::invalid_argument("min citations must be at least 1");
  if (!(date_epsilon > 0.0) || !(date_epsilon < 0.5)) {
    throw std::invalid_argument("date epsilon must lie in (0, 0.5)");
  }
}

std::vector<RawRecord> filter_records(std::vector<RawRecord> records,
                                      const EncoderOptions& options) {
  options.validate();
  if (options.min_date) {
    std::erase_if(records, [&](const RawRecord& r) { return r.date && *r.date < *options.min_date; });
  }
  for (const std::string& modality : options.require) {
    std::erase_if(records, [&](const RawRecord& r) {
      if (modality == "authors") return r.authors.empty();
      if (modality == "citations") return r.citations.empty();
      return !r.date.has_value();
    });
  }
  return records;
}

Corpus encode_corpus(const std::vector<RawRecord>& records, const EncoderOptions& options) {
  options.validate();
  Corpus corpus = build_corpus(records, options.ingest);
  for (const std::string& family : options.features) {
    if (family == "authors") {
      corpus = encode_author_features(std::move(corpus), options.min_papers);
    } else if (family == "citations") {
      corpus = encode_citation_features(std::move(corpus), options.min_citations);
    } else {
      corpus = encode_date_features(std::move(corpus), options.date_epsilon);
    }
  }
  return corpus;
}

void CvOptions::validate() const {
  if (folds < 2) throw std::invalid_argument("folds must be at least 2");
  if (seeds < 1) throw std::invalid_argument("seeds must be at least 1");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (models.empty()) throw std::invalid_argument("at least one model required");
  for (const std::string& m : models) {
    if (m != "dmr" && m != "lda") throw std::invalid_argument("unknown model: " + m);
  }
  train.validate();
  eval.validate();
  encoder.validate();
}

std::vector<int> assign_folds(std::size_t count, int folds, std::uint64_t shuffle_seed) {
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  Rng rng(shuffle_seed);
  for (std::size_t i = count; i-- > 1;) {
    const std::size_t j = static_cast<std::size_t>(rng.uniform_int(static_cast<int>(i + 1)));
    std::swap(order[i], order[j]);
  }
  std::vector<int> fold_of_doc(count, 0);
  for (std::size_t position = 0; position < count; ++position) {
    fold_of_doc[order[position]] =
        static_cast<int>(position * static_cast<std::size_t>(folds) / count);
  }
  return fold_of_doc;
}

CvOutcome run_cv(const std::vector<RawRecord>& records, const CvOptions& options) {
  options.validate();
  std::vector<RawRecord> filtered = filter_records(records, options.encoder);
  if (filtered.size() < static_cast<std::size_t>(options.folds)) {
    throw std::invalid_argument("fold count exceeds document count");
  }

  CvOutcome outcome;
  outcome.fold_of_doc = assign_folds(filtered.size(), options.folds, options.shuffle_seed);

  struct RunSpec {
    std::string model;
    int fold;
    int seed_index;
  };
  std::vector<RunSpec> specs;
  for (const std::string& model : options.models) {
    for (int fold = 0; fold < options.folds; ++fold) {
      for (int s = 0; s < options.seeds; ++s) {
        specs.push_back(RunSpec{model, fold, s});
      }
    }
  }

  outcome.runs.resize(specs.size());
  Rng base(options.train.seed);

  auto execute = [&](std::size_t run_index) {
    const RunSpec& spec = specs[run_index];
    Rng run_rng = base.derive(run_index);
    const std::uint64_t train_seed = run_rng.derive(0).seed();
    const std::uint64_t eval_seed = run_rng.derive(1).seed();

    std::vector<RawRecord> train_records;
    std::vector<const RawRecord*> held_records;
    for (std::size_t i = 0; i < filtered.size(); ++i) {
      if (outcome.fold_of_doc[i] == spec.fold) {
        held_records.push_back(&filtered[i]);
      } else {
        train_records.push_back(filtered[i]);
      }
    }

    Corpus corpus = encode_corpus(train_records, options.encoder);
    TrainConfig train_config = options.train;
    train_config.seed = train_seed;
    train_config.log = nullptr;
    const ModelSnapshot snapshot = spec.model == "dmr" ? train_dmr(std::move(corpus), train_config)
                                                       : train_lda(std::move(corpus), train_config);

    int dropped = 0;
    std::vector<Document> held_docs;
    held_docs.reserve(held_records.size());
    for (const RawRecord* rec : held_records) {
      held_docs.push_back(encode_held_out(*rec, snapshot.vocabulary, snapshot.features,
                                          options.encoder.ingest, &dropped));
    }

    EvalConfig eval_config = options.eval;
    eval_config.seed = eval_seed;
    const PerplexityResult ppl = perplexity(snapshot, held_docs, eval_config);
    const ElResult el = empirical_likelihood_all(snapshot, held_docs, eval_config);

    CvRun& run = outcome.runs[run_index];
    run.model = spec.model;
    run.fold = spec.fold;
    run.seed_index = spec.seed_index;
    run.train_seed = train_seed;
    run.perplexity = ppl.value;
    run.el_total = el.total;
    run.el_mean = el.docs > 0 ? el.total / el.docs : 0.0;
    run.scored_tokens = ppl.scored_tokens;
    run.excluded_docs = ppl.excluded_docs;
    run.dropped_tokens = dropped;
    run.held_out_docs = static_cast<int>(held_docs.size());
  };

  const int jobs = std::min<int>(options.jobs, static_cast<int>(specs.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) execute(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= specs.size()) return;
        try {
          execute(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  return outcome;
}

int default_jobs() {
  const char* env = std::getenv("DMR_JOBS");
  if (!env || !*env) return 1;
  const int value = std::atoi(env);
  return value >= 1 ? value : 1;
}

}  // namespace dmr
