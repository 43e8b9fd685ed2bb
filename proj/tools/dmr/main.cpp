#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dmr/digest.hpp"
#include "dmr/eval.hpp"
#include "dmr/experiment.hpp"
#include "dmr/snapshot.hpp"
#include "dmr/synth.hpp"
#include "dmr/trainer.hpp"

namespace {

using FlagMap = std::vector<std::pair<std::string, std::string>>;

int run_cli(const std::vector<std::string>& args);

std::string join(const std::vector<std::string>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i];
  }
  return out;
}

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

/// Five-column report format shared by eval and predict outputs.
class Report {
 public:
  Report(const dmr::RunManifest& manifest, std::vector<std::string> header) {
    buffer_ += "# run_digest=" + dmr::digest_hex(manifest.run_digest()) + "\n";
    for (const auto& [path, digest] : manifest.inputs) {
      buffer_ += "# input " + path + "=" + digest + "\n";
    }
    buffer_ += join(header, "\t") + "\n";
  }

  void row(const std::vector<std::string>& cells) { buffer_ += join(cells, "\t") + "\n"; }
  const std::string& text() const { return buffer_; }

 private:
  std::string buffer_;
};

std::string fmt(double v) { return dmr::format_double(v); }
std::string fmt(int v) { return std::to_string(v); }
std::string fmt(std::int64_t v) { return std::to_string(v); }
std::string fmt(std::uint64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// Shared flag blocks

struct EncoderFlags {
  std::vector<std::string> features;
  int min_papers = 5;
  int min_citations = 10;
  double date_epsilon = 1e-3;
  std::optional<int> min_date;
  std::vector<std::string> require;
  std::string stopwords;
};

void add_encoder_flags(CLI::App* cmd, EncoderFlags& f) {
  cmd->add_option("--features", f.features,
                  "Feature families to encode: authors, citations, dates (comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"authors", "citations", "dates"}));
  cmd->add_option("--min-papers", f.min_papers,
                  "Drop author indicators appearing on fewer documents than this")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--min-citations", f.min_citations,
                  "Drop citation indicators referenced by fewer documents than this")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--date-epsilon", f.date_epsilon,
                  "Clamp for the date proportion before taking logs");
  cmd->add_option("--min-date", f.min_date, "Drop documents dated earlier than this year");
  cmd->add_option("--require-feature", f.require,
                  "Drop documents lacking a modality: authors, citations, dates")
      ->delimiter(',')
      ->check(CLI::IsMember({"authors", "citations", "dates"}));
  cmd->add_option("--stopwords", f.stopwords, "File with one stopword per line")
      ->check(CLI::ExistingFile);
}

dmr::EncoderOptions to_encoder_options(const EncoderFlags& f) {
  dmr::EncoderOptions options;
  options.features = f.features;
  options.min_papers = f.min_papers;
  options.min_citations = f.min_citations;
  options.date_epsilon = f.date_epsilon;
  options.min_date = f.min_date;
  options.require = f.require;
  if (!f.stopwords.empty()) {
    std::ifstream in(f.stopwords);
    if (!in) throw std::runtime_error("cannot open stopword file: " + f.stopwords);
    std::string word;
    while (std::getline(in, word)) {
      while (!word.empty() && (word.back() == '\r' || word.back() == ' ')) word.pop_back();
      if (!word.empty()) options.ingest.stopwords.insert(lowercase(word));
    }
  }
  return options;
}

void record_encoder_flags(FlagMap& m, const EncoderFlags& f) {
  if (!f.features.empty()) m.emplace_back("features", join(f.features, ","));
  m.emplace_back("min-papers", fmt(f.min_papers));
  m.emplace_back("min-citations", fmt(f.min_citations));
  m.emplace_back("date-epsilon", fmt(f.date_epsilon));
  if (f.min_date) m.emplace_back("min-date", fmt(*f.min_date));
  if (!f.require.empty()) m.emplace_back("require-feature", join(f.require, ","));
  if (!f.stopwords.empty()) m.emplace_back("stopwords", f.stopwords);
}

struct TrainFlags {
  std::string corpus;
  std::string out = "snapshot.json";
  std::string model = "dmr";
  int topics = 100;
  double beta = 0.01;
  double sigma_default = 10.0;
  double sigma = 0.5;
  int iterations = 1000;
  int burn_in = 250;
  int optimize_interval = 50;
  std::uint64_t seed = 0;
  std::string phi_smoothing = "vocabulary";
  bool quiet = false;
  EncoderFlags encoder;
};

void add_train_model_flags(CLI::App* cmd, TrainFlags& f) {
  cmd->add_option("--model", f.model, "Model to train")->check(CLI::IsMember({"dmr", "lda"}));
  cmd->add_option("--topics", f.topics, "Number of topics")->check(CLI::PositiveNumber);
  cmd->add_option("--beta", f.beta, "Topic-word smoothing");
  cmd->add_option("--sigma-default", f.sigma_default, "Prior variance of the default feature");
  cmd->add_option("--sigma", f.sigma, "Prior variance of every other feature");
  cmd->add_option("--iterations", f.iterations, "Total sampling sweeps")->check(CLI::PositiveNumber);
  cmd->add_option("--burn-in", f.burn_in, "Sweeps before the first parameter optimization")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--optimize-interval", f.optimize_interval,
                  "Sweeps between parameter optimizations")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Random seed");
  cmd->add_option("--phi-smoothing", f.phi_smoothing,
                  "Topic-word denominator: vocabulary (V*beta) or topic_count (T*beta)")
      ->check(CLI::IsMember({"vocabulary", "topic_count"}));
}

dmr::TrainConfig to_train_config(const TrainFlags& f) {
  dmr::TrainConfig config;
  config.topics = f.topics;
  config.beta = f.beta;
  config.sigma_default = f.sigma_default;
  config.sigma_other = f.sigma;
  config.iterations = f.iterations;
  config.burn_in = f.burn_in;
  config.optimize_interval = f.optimize_interval;
  config.seed = f.seed;
  config.smoothing = f.phi_smoothing == "vocabulary" ? dmr::PhiSmoothing::vocabulary
                                                     : dmr::PhiSmoothing::topic_count;
  if (!f.quiet) {
    config.log = [](const std::string& line) { std::cerr << line << "\n"; };
  }
  return config;
}

void record_train_model_flags(FlagMap& m, const TrainFlags& f) {
  m.emplace_back("model", f.model);
  m.emplace_back("topics", fmt(f.topics));
  m.emplace_back("beta", fmt(f.beta));
  m.emplace_back("sigma-default", fmt(f.sigma_default));
  m.emplace_back("sigma", fmt(f.sigma));
  m.emplace_back("iterations", fmt(f.iterations));
  m.emplace_back("burn-in", fmt(f.burn_in));
  m.emplace_back("optimize-interval", fmt(f.optimize_interval));
  m.emplace_back("seed", fmt(f.seed));
  m.emplace_back("phi-smoothing", f.phi_smoothing);
  if (f.quiet) m.emplace_back("quiet", "true");
}

dmr::RunManifest make_manifest(std::string command, FlagMap flags,
                               std::vector<std::string> input_paths) {
  dmr::RunManifest manifest;
  manifest.command = std::move(command);
  manifest.flags = std::move(flags);
  std::sort(manifest.flags.begin(), manifest.flags.end());
  for (const std::string& path : input_paths) {
    manifest.inputs.emplace_back(path, dmr::digest_hex(dmr::file_digest(path)));
  }
  manifest.timestamp = dmr::current_timestamp();
  return manifest;
}

// ---------------------------------------------------------------------------
// train

int cmd_train(const TrainFlags& f) {
  const dmr::EncoderOptions encoder = to_encoder_options(f.encoder);
  std::vector<dmr::RawRecord> records =
      dmr::filter_records(dmr::read_corpus_file(f.corpus), encoder);
  if (records.empty()) throw std::runtime_error("no documents remain after filtering");
  dmr::Corpus corpus = dmr::encode_corpus(records, encoder);
  const dmr::TrainConfig config = to_train_config(f);

  dmr::ModelSnapshot snapshot = f.model == "dmr" ? dmr::train_dmr(std::move(corpus), config)
                                                 : dmr::train_lda(std::move(corpus), config);
  snapshot.corpus_digest = dmr::file_digest(f.corpus);
  dmr::save_snapshot(snapshot, f.out);

  FlagMap flags;
  flags.emplace_back("corpus", f.corpus);
  flags.emplace_back("out", f.out);
  record_train_model_flags(flags, f);
  record_encoder_flags(flags, f.encoder);
  std::vector<std::string> inputs{f.corpus};
  if (!f.encoder.stopwords.empty()) inputs.push_back(f.encoder.stopwords);
  dmr::save_manifest(make_manifest("train", std::move(flags), std::move(inputs)),
                     f.out + ".manifest.json");

  std::cout << "trained " << f.model << " on " << records.size() << " documents; wrote " << f.out
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// eval

struct EvalFlags {
  std::string snapshot;
  std::string corpus;
  std::string out = "report.tsv";
  std::string metric = "both";
  int samples = 1000;
  int sweeps = 200;
  int sweep_burn_in = 50;
  std::uint64_t seed = 0;
  std::string stopwords;
};

std::vector<dmr::Document> load_held_out(const dmr::ModelSnapshot& snapshot,
                                         const std::vector<dmr::RawRecord>& records,
                                         const std::string& stopwords_path, int* dropped) {
  EncoderFlags enc;
  enc.stopwords = stopwords_path;
  const dmr::IngestOptions ingest = to_encoder_options(enc).ingest;
  std::vector<dmr::Document> docs;
  docs.reserve(records.size());
  for (const dmr::RawRecord& rec : records) {
    docs.push_back(dmr::encode_held_out(rec, snapshot.vocabulary, snapshot.features, ingest, dropped));
  }
  return docs;
}

int cmd_eval(const EvalFlags& f) {
  const dmr::ModelSnapshot snapshot = dmr::load_snapshot(f.snapshot);
  const std::vector<dmr::RawRecord> records = dmr::read_corpus_file(f.corpus);
  int dropped = 0;
  const std::vector<dmr::Document> docs = load_held_out(snapshot, records, f.stopwords, &dropped);

  dmr::EvalConfig config;
  config.el_samples = f.samples;
  config.conditioning_sweeps = f.sweeps;
  config.conditioning_burn_in = f.sweep_burn_in;
  config.seed = f.seed;

  FlagMap flags;
  flags.emplace_back("snapshot", f.snapshot);
  flags.emplace_back("corpus", f.corpus);
  flags.emplace_back("out", f.out);
  flags.emplace_back("metric", f.metric);
  flags.emplace_back("samples", fmt(f.samples));
  flags.emplace_back("sweeps", fmt(f.sweeps));
  flags.emplace_back("sweep-burn-in", fmt(f.sweep_burn_in));
  flags.emplace_back("seed", fmt(f.seed));
  if (!f.stopwords.empty()) flags.emplace_back("stopwords", f.stopwords);
  std::vector<std::string> inputs{f.snapshot, f.corpus};
  if (!f.stopwords.empty()) inputs.push_back(f.stopwords);
  const dmr::RunManifest manifest = make_manifest("eval", std::move(flags), std::move(inputs));

  Report report(manifest, {"scope", "id", "metric", "value", "detail"});
  if (f.metric == "perplexity" || f.metric == "both") {
    const dmr::PerplexityResult ppl = dmr::perplexity(snapshot, docs, config);
    for (const dmr::PerplexityDocEntry& entry : ppl.per_doc) {
      if (entry.excluded) {
        report.row({"doc", entry.id, "perplexity_excluded", "1", "fewer than two tokens"});
      } else {
        report.row({"doc", entry.id, "held_out_log_prob", fmt(entry.log_prob),
                    fmt(entry.scored_tokens) + " tokens"});
      }
    }
    report.row({"aggregate", "all", "perplexity", fmt(ppl.value), ""});
    report.row({"aggregate", "all", "scored_tokens", fmt(ppl.scored_tokens), ""});
    report.row({"aggregate", "all", "excluded_docs", fmt(ppl.excluded_docs), ""});
  }
  if (f.metric == "el" || f.metric == "both") {
    const dmr::ElResult el = dmr::empirical_likelihood_all(snapshot, docs, config);
    for (const dmr::ElDocEntry& entry : el.per_doc) {
      report.row({"doc", entry.id, "empirical_log_likelihood", fmt(entry.log_likelihood),
                  fmt(entry.tokens) + " tokens"});
    }
    report.row({"aggregate", "all", "empirical_log_likelihood_total", fmt(el.total), ""});
    report.row({"aggregate", "all", "empirical_log_likelihood_mean",
                fmt(el.docs > 0 ? el.total / el.docs : 0.0), ""});
  }
  report.row({"aggregate", "all", "unseen_tokens_dropped", fmt(dropped), ""});

  dmr::write_file(f.out, report.text());
  dmr::save_manifest(manifest, f.out + ".manifest.json");
  std::cout << "evaluated " << docs.size() << " documents; wrote " << f.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// predict

struct PredictFlags {
  std::string snapshot;
  std::string corpus;
  std::string out = "predictions.tsv";
  std::string kind = "authors";
  int samples = 100;
  std::uint64_t seed = 0;
  std::string stopwords;
};

int cmd_predict(const PredictFlags& f) {
  const dmr::ModelSnapshot snapshot = dmr::load_snapshot(f.snapshot);
  const std::string prefix = f.kind == "authors" ? "author:" : "cite:";
  std::vector<int> candidates;
  for (int k = 1; k < snapshot.features.size(); ++k) {
    if (snapshot.features.name(k).starts_with(prefix)) candidates.push_back(k);
  }
  if (candidates.empty()) {
    throw std::runtime_error("snapshot has no " + f.kind + " features to rank");
  }

  const std::vector<dmr::RawRecord> records = dmr::read_corpus_file(f.corpus);
  int dropped = 0;
  const std::vector<dmr::Document> docs = load_held_out(snapshot, records, f.stopwords, &dropped);

  dmr::EvalConfig config;
  config.prediction_samples = f.samples;
  config.seed = f.seed;

  FlagMap flags;
  flags.emplace_back("snapshot", f.snapshot);
  flags.emplace_back("corpus", f.corpus);
  flags.emplace_back("out", f.out);
  flags.emplace_back("kind", f.kind);
  flags.emplace_back("samples", fmt(f.samples));
  flags.emplace_back("seed", fmt(f.seed));
  if (!f.stopwords.empty()) flags.emplace_back("stopwords", f.stopwords);
  std::vector<std::string> inputs{f.snapshot, f.corpus};
  if (!f.stopwords.empty()) inputs.push_back(f.stopwords);
  const dmr::RunManifest manifest = make_manifest("predict", std::move(flags), std::move(inputs));

  Report report(manifest, {"scope", "id", "metric", "value", "detail"});
  int excluded = 0;
  int ranked_docs = 0;
  int top1 = 0;
  double mrr_sum = 0.0;
  std::vector<int> best_ranks;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const std::vector<std::string>& labels =
        f.kind == "authors" ? records[i].authors : records[i].citations;
    std::vector<int> truth;
    for (const std::string& label : labels) {
      const int k = snapshot.features.lookup(prefix + label);
      if (k > 0) truth.push_back(k);
    }
    if (truth.empty()) {
      ++excluded;
      report.row({"doc", docs[i].id, "excluded", "1", "no retained true label"});
      continue;
    }
    const std::vector<dmr::RankedCandidate> ranked =
        dmr::rank_candidates(snapshot, docs[i], candidates, config);
    int best_rank = 0;
    for (std::size_t r = 0; r < ranked.size(); ++r) {
      if (std::find(truth.begin(), truth.end(), ranked[r].feature) != truth.end()) {
        best_rank = static_cast<int>(r) + 1;
        break;
      }
    }
    ++ranked_docs;
    best_ranks.push_back(best_rank);
    mrr_sum += 1.0 / best_rank;
    if (best_rank == 1) ++top1;
    report.row({"doc", docs[i].id, "best_true_rank", fmt(best_rank),
                "top=" + snapshot.features.name(ranked.front().feature)});
  }
  if (ranked_docs == 0) throw std::runtime_error("no documents with retained true labels");

  report.row({"aggregate", "all", "ranked_docs", fmt(ranked_docs), ""});
  report.row({"aggregate", "all", "excluded_docs", fmt(excluded), ""});
  report.row({"aggregate", "all", "mean_reciprocal_rank", fmt(mrr_sum / ranked_docs), ""});
  report.row({"aggregate", "all", "top1_accuracy",
              fmt(static_cast<double>(top1) / ranked_docs), ""});
  for (std::size_t r = 1; r <= candidates.size(); ++r) {
    const auto within = static_cast<double>(std::count_if(
        best_ranks.begin(), best_ranks.end(),
        [&](int rank) { return rank >= 1 && static_cast<std::size_t>(rank) <= r; }));
    report.row({"curve", fmt(static_cast<std::int64_t>(r)), "fraction_within_rank",
                fmt(within / ranked_docs), ""});
  }

  dmr::write_file(f.out, report.text());
  dmr::save_manifest(manifest, f.out + ".manifest.json");
  std::cout << "ranked " << ranked_docs << " documents; wrote " << f.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// report

struct ReportFlags {
  std::string snapshot;
  bool prior = false;
  std::string set;
  std::string feature;
  int top = 10;
  std::string out;
};

std::string suggest_features(const dmr::FeatureDictionary& dict, const std::string& query) {
  std::vector<std::string> matches;
  const std::string q = lowercase(query);
  for (int k = 0; k < dict.size(); ++k) {
    if (lowercase(dict.name(k)).find(q) != std::string::npos) matches.push_back(dict.name(k));
    if (matches.size() >= 5) break;
  }
  if (matches.empty()) {
    const std::size_t colon = q.find(':');
    const std::string stem = colon == std::string::npos ? q : q.substr(colon + 1);
    for (int k = 0; k < dict.size() && matches.size() < 5; ++k) {
      if (!stem.empty() && lowercase(dict.name(k)).find(stem) != std::string::npos) {
        matches.push_back(dict.name(k));
      }
    }
  }
  return matches.empty() ? std::string("none") : join(matches, ", ");
}

dmr::FeatureVector parse_feature_set(const dmr::FeatureDictionary& dict, const std::string& set) {
  dmr::FeatureVector features;
  std::stringstream ss(set);
  std::string name;
  while (std::getline(ss, name, ',')) {
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (name.empty()) continue;
    if (name.starts_with("date:") && dict.date_meta) {
      char* end = nullptr;
      const long year = std::strtol(name.c_str() + 5, &end, 10);
      if (end && *end == '\0') {
        const dmr::DateMeta& meta = *dict.date_meta;
        double p = static_cast<double>(year - meta.min_date) /
                   static_cast<double>(meta.max_date - meta.min_date);
        p = std::clamp(p, meta.epsilon, 1.0 - meta.epsilon);
        features.set(dict.lookup("date:log_p"), std::log(p));
        features.set(dict.lookup("date:log_1mp"), std::log1p(-p));
        continue;
      }
    }
    const int k = dict.lookup(name);
    if (k < 0) {
      throw std::runtime_error("unknown feature '" + name +
                               "'; near matches: " + suggest_features(dict, name));
    }
    if (k > 0) features.set(k, 1.0);
  }
  return features;
}

int cmd_report(const ReportFlags& f) {
  if (f.prior == !f.feature.empty()) {
    throw std::runtime_error("pass exactly one of --prior (with --set) or --feature");
  }
  if (!f.prior && !f.set.empty()) throw std::runtime_error("--set requires --prior");
  const dmr::ModelSnapshot snapshot = dmr::load_snapshot(f.snapshot);

  std::vector<dmr::ReportRow> rows;
  if (f.prior) {
    rows = dmr::topic_prior_report(snapshot, parse_feature_set(snapshot.features, f.set), f.top);
  } else {
    const int k = snapshot.features.lookup(f.feature);
    if (k < 0) {
      throw std::runtime_error("unknown feature '" + f.feature + "'; near matches: " +
                               suggest_features(snapshot.features, f.feature));
    }
    rows = dmr::ranked_topics_for_feature(snapshot, k, f.top);
  }

  std::string text = "value\ttopic\ttop_words\n";
  for (const dmr::ReportRow& row : rows) {
    text += fmt(row.value) + "\t" + fmt(row.topic) + "\t" + join(row.top_words, " ") + "\n";
  }

  if (f.out.empty()) {
    std::cout << text;
  } else {
    dmr::write_file(f.out, text);
    FlagMap flags;
    flags.emplace_back("snapshot", f.snapshot);
    if (f.prior) flags.emplace_back("prior", "true");
    if (!f.set.empty()) flags.emplace_back("set", f.set);
    if (!f.feature.empty()) flags.emplace_back("feature", f.feature);
    flags.emplace_back("top", fmt(f.top));
    flags.emplace_back("out", f.out);
    dmr::save_manifest(make_manifest("report", std::move(flags), {f.snapshot}),
                       f.out + ".manifest.json");
    std::cout << "wrote " << f.out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// cv

struct CvFlags {
  std::string corpus;
  std::string out_prefix = "cv";
  int folds = 10;
  int seeds = 5;
  std::uint64_t shuffle_seed = 0;
  int jobs = 0;  // 0: DMR_JOBS or 1
  std::vector<std::string> models = {"dmr", "lda"};
  int samples = 1000;
  int sweeps = 200;
  int sweep_burn_in = 50;
  TrainFlags train;
};

int cmd_cv(const CvFlags& f) {
  dmr::CvOptions options;
  options.folds = f.folds;
  options.seeds = f.seeds;
  options.shuffle_seed = f.shuffle_seed;
  options.jobs = f.jobs > 0 ? f.jobs : dmr::default_jobs();
  options.models = f.models;
  options.train = to_train_config(f.train);
  options.train.log = nullptr;
  options.eval.el_samples = f.samples;
  options.eval.conditioning_sweeps = f.sweeps;
  options.eval.conditioning_burn_in = f.sweep_burn_in;
  options.encoder = to_encoder_options(f.train.encoder);

  const std::vector<dmr::RawRecord> records = dmr::read_corpus_file(f.corpus);
  const dmr::CvOutcome outcome = dmr::run_cv(records, options);

  FlagMap flags;
  flags.emplace_back("corpus", f.corpus);
  flags.emplace_back("out-prefix", f.out_prefix);
  flags.emplace_back("folds", fmt(f.folds));
  flags.emplace_back("seeds", fmt(f.seeds));
  flags.emplace_back("shuffle-seed", fmt(f.shuffle_seed));
  flags.emplace_back("models", join(f.models, ","));
  flags.emplace_back("samples", fmt(f.samples));
  flags.emplace_back("sweeps", fmt(f.sweeps));
  flags.emplace_back("sweep-burn-in", fmt(f.sweep_burn_in));
  record_train_model_flags(flags, f.train);
  record_encoder_flags(flags, f.train.encoder);
  std::vector<std::string> inputs{f.corpus};
  if (!f.train.encoder.stopwords.empty()) inputs.push_back(f.train.encoder.stopwords);
  dmr::RunManifest manifest = make_manifest("cv", std::move(flags), std::move(inputs));
  manifest.fold_assignment = outcome.fold_of_doc;

  std::string runs = "model\tfold\tseed\tmetric\tvalue\n";
  auto run_row = [&runs](const dmr::CvRun& run, const std::string& metric, const std::string& value) {
    runs += run.model + "\t" + fmt(run.fold) + "\t" + fmt(run.seed_index) + "\t" + metric + "\t" +
            value + "\n";
  };
  for (const dmr::CvRun& run : outcome.runs) {
    run_row(run, "perplexity", fmt(run.perplexity));
    run_row(run, "empirical_log_likelihood_total", fmt(run.el_total));
    run_row(run, "empirical_log_likelihood_mean", fmt(run.el_mean));
    run_row(run, "scored_tokens", fmt(run.scored_tokens));
    run_row(run, "excluded_docs", fmt(run.excluded_docs));
    run_row(run, "dropped_tokens", fmt(run.dropped_tokens));
    run_row(run, "held_out_docs", fmt(run.held_out_docs));
  }
  dmr::write_file(f.out_prefix + "_runs.tsv", runs);

  std::string summary = "model\tfold\tmetric\tmean\n";
  auto mean_rows = [&](const std::string& model, int fold) {
    double ppl = 0.0, el = 0.0;
    int n = 0;
    for (const dmr::CvRun& run : outcome.runs) {
      if (run.model != model || (fold >= 0 && run.fold != fold)) continue;
      ppl += run.perplexity;
      el += run.el_total;
      ++n;
    }
    if (n == 0) return;
    const std::string fold_name = fold >= 0 ? fmt(fold) : std::string("all");
    summary += model + "\t" + fold_name + "\tperplexity\t" + fmt(ppl / n) + "\n";
    summary += model + "\t" + fold_name + "\tempirical_log_likelihood_total\t" + fmt(el / n) + "\n";
  };
  for (const std::string& model : f.models) {
    for (int fold = 0; fold < f.folds; ++fold) mean_rows(model, fold);
    mean_rows(model, -1);
  }
  dmr::write_file(f.out_prefix + "_summary.tsv", summary);
  dmr::save_manifest(manifest, f.out_prefix + ".manifest.json");

  std::cout << "ran " << outcome.runs.size() << " fold-seed jobs; wrote " << f.out_prefix
            << "_runs.tsv, " << f.out_prefix << "_summary.tsv\n";
  return 0;
}

// ---------------------------------------------------------------------------
// synth

struct SynthFlags {
  std::string out = "synthetic.jsonl";
  std::string truth = "truth.json";
  dmr::SynthConfig config;
};

int cmd_synth(const SynthFlags& f) {
  const dmr::SynthOutput output = dmr::generate_synthetic(f.config);
  dmr::write_file(f.out, dmr::synth_corpus_jsonl(output));
  dmr::write_file(f.truth, dmr::synth_truth_json(f.config, output));

  FlagMap flags;
  flags.emplace_back("out", f.out);
  flags.emplace_back("truth", f.truth);
  flags.emplace_back("docs", fmt(f.config.docs));
  flags.emplace_back("topics", fmt(f.config.topics));
  flags.emplace_back("vocab", fmt(f.config.vocab));
  flags.emplace_back("authors", fmt(f.config.authors));
  flags.emplace_back("doc-len", fmt(f.config.doc_len));
  flags.emplace_back("kind", f.config.kind);
  flags.emplace_back("strength", fmt(f.config.strength));
  flags.emplace_back("intercept", fmt(f.config.intercept));
  flags.emplace_back("phi-concentration", fmt(f.config.phi_concentration));
  flags.emplace_back("seed", fmt(f.config.seed));
  flags.emplace_back("min-date", fmt(f.config.min_date));
  flags.emplace_back("max-date", fmt(f.config.max_date));
  flags.emplace_back("date-epsilon", fmt(f.config.epsilon));
  dmr::save_manifest(make_manifest("synth", std::move(flags), {}), f.out + ".manifest.json");

  std::cout << "generated " << f.config.docs << " documents; wrote " << f.out << " and " << f.truth
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// rerun

int cmd_rerun(const std::string& manifest_path) {
  const dmr::RunManifest manifest = dmr::load_manifest(manifest_path);
  if (manifest.command == "rerun") throw std::runtime_error("manifest does not name a command");
  for (const auto& [path, digest] : manifest.inputs) {
    const std::string current = dmr::digest_hex(dmr::file_digest(path));
    if (current != digest) {
      throw std::runtime_error("input file changed since the manifest was written: " + path +
                               " (expected " + digest + ", found " + current + ")");
    }
  }
  std::vector<std::string> args;
  args.push_back(manifest.command);
  for (const auto& [name, value] : manifest.flags) {
    if (value == "true") {
      args.push_back("--" + name);
    } else if (value == "false") {
      continue;
    } else {
      args.push_back("--" + name);
      args.push_back(value);
    }
  }
  return run_cli(args);
}

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Topic modeling with metadata-conditioned Dirichlet priors"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read flags from a config file (sections per subcommand)");

  TrainFlags train_flags;
  CLI::App* train = app.add_subcommand("train", "Train a model and write a snapshot");
  train->add_option("--corpus", train_flags.corpus, "Corpus file (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  train->add_option("--out", train_flags.out, "Snapshot output path");
  add_train_model_flags(train, train_flags);
  add_encoder_flags(train, train_flags.encoder);
  train->add_flag("--quiet", train_flags.quiet, "Suppress progress logging");
  train->callback([&train_flags] { cmd_train(train_flags); });

  EvalFlags eval_flags;
  CLI::App* eval = app.add_subcommand("eval", "Held-out perplexity and empirical likelihood");
  eval->add_option("--snapshot", eval_flags.snapshot, "Trained snapshot")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--corpus", eval_flags.corpus, "Held-out corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--out", eval_flags.out, "Report output path");
  eval->add_option("--metric", eval_flags.metric, "Metric to compute")
      ->check(CLI::IsMember({"perplexity", "el", "both"}));
  eval->add_option("--samples", eval_flags.samples, "Topic-multinomial samples per document")
      ->check(CLI::PositiveNumber);
  eval->add_option("--sweeps", eval_flags.sweeps, "Conditioning sweeps per document")
      ->check(CLI::PositiveNumber);
  eval->add_option("--sweep-burn-in", eval_flags.sweep_burn_in,
                   "Extra conditioning sweeps before the counted ones")
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--seed", eval_flags.seed, "Random seed");
  eval->add_option("--stopwords", eval_flags.stopwords, "File with one stopword per line")
      ->check(CLI::ExistingFile);
  eval->callback([&eval_flags] { cmd_eval(eval_flags); });

  PredictFlags predict_flags;
  CLI::App* predict = app.add_subcommand("predict", "Rank candidate authors or citations");
  predict->add_option("--snapshot", predict_flags.snapshot, "Trained snapshot")
      ->required()
      ->check(CLI::ExistingFile);
  predict->add_option("--corpus", predict_flags.corpus, "Held-out corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  predict->add_option("--out", predict_flags.out, "Report output path");
  predict->add_option("--kind", predict_flags.kind, "Candidate family")
      ->check(CLI::IsMember({"authors", "citations"}));
  predict->add_option("--samples", predict_flags.samples, "Assignment sequences per document")
      ->check(CLI::PositiveNumber);
  predict->add_option("--seed", predict_flags.seed, "Random seed");
  predict->add_option("--stopwords", predict_flags.stopwords, "File with one stopword per line")
      ->check(CLI::ExistingFile);
  predict->callback([&predict_flags] { cmd_predict(predict_flags); });

  ReportFlags report_flags;
  CLI::App* report = app.add_subcommand("report", "Topic tables from a snapshot");
  report->add_option("--snapshot", report_flags.snapshot, "Trained snapshot")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_flag("--prior", report_flags.prior, "Rank topics by the prior for a feature set");
  report->add_option("--set", report_flags.set,
                     "Comma-separated feature names for --prior (date:YEAR allowed)");
  report->add_option("--feature", report_flags.feature,
                     "Rank topics by default-plus-feature weight for one feature");
  report->add_option("--top", report_flags.top, "Rows to emit")->check(CLI::NonNegativeNumber);
  report->add_option("--out", report_flags.out, "Output path (stdout when omitted)");
  report->callback([&report_flags] { cmd_report(report_flags); });

  CvFlags cv_flags;
  CLI::App* cv = app.add_subcommand("cv", "Cross-validated training and evaluation");
  cv->add_option("--corpus", cv_flags.corpus, "Corpus file (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  cv->add_option("--out-prefix", cv_flags.out_prefix, "Prefix for output files");
  cv->add_option("--folds", cv_flags.folds, "Number of folds")->check(CLI::Range(2, 1000000));
  cv->add_option("--seeds", cv_flags.seeds, "Random initializations per fold")
      ->check(CLI::PositiveNumber);
  cv->add_option("--shuffle-seed", cv_flags.shuffle_seed, "Seed for the fold shuffle");
  cv->add_option("--jobs", cv_flags.jobs, "Concurrent runs (default: DMR_JOBS or 1)")
      ->check(CLI::NonNegativeNumber);
  cv->add_option("--models", cv_flags.models, "Models to compare")
      ->delimiter(',')
      ->check(CLI::IsMember({"dmr", "lda"}));
  cv->add_option("--samples", cv_flags.samples, "Topic-multinomial samples per document")
      ->check(CLI::PositiveNumber);
  cv->add_option("--sweeps", cv_flags.sweeps, "Conditioning sweeps per document")
      ->check(CLI::PositiveNumber);
  cv->add_option("--sweep-burn-in", cv_flags.sweep_burn_in,
                 "Extra conditioning sweeps before the counted ones")
      ->check(CLI::NonNegativeNumber);
  add_train_model_flags(cv, cv_flags.train);
  add_encoder_flags(cv, cv_flags.train.encoder);
  cv->add_flag("--quiet", cv_flags.train.quiet, "Suppress progress logging");
  cv->callback([&cv_flags] { cmd_cv(cv_flags); });

  SynthFlags synth_flags;
  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic corpus with ground truth");
  synth->add_option("--out", synth_flags.out, "Corpus output path");
  synth->add_option("--truth", synth_flags.truth, "Ground-truth output path");
  synth->add_option("--docs", synth_flags.config.docs, "Documents")->check(CLI::PositiveNumber);
  synth->add_option("--topics", synth_flags.config.topics, "Topics")->check(CLI::PositiveNumber);
  synth->add_option("--vocab", synth_flags.config.vocab, "Vocabulary size")
      ->check(CLI::Range(2, 1000000));
  synth->add_option("--authors", synth_flags.config.authors, "Authors (authors kind)")
      ->check(CLI::PositiveNumber);
  synth->add_option("--doc-len", synth_flags.config.doc_len, "Tokens per document")
      ->check(CLI::PositiveNumber);
  synth->add_option("--kind", synth_flags.config.kind, "Metadata kind")
      ->check(CLI::IsMember({"authors", "dates"}));
  synth->add_option("--strength", synth_flags.config.strength, "Feature weight separation");
  synth->add_option("--intercept", synth_flags.config.intercept, "Shared intercept weight");
  synth->add_option("--phi-concentration", synth_flags.config.phi_concentration,
                    "Dirichlet concentration for topic-word draws");
  synth->add_option("--seed", synth_flags.config.seed, "Random seed");
  synth->add_option("--min-date", synth_flags.config.min_date, "Earliest date (dates kind)");
  synth->add_option("--max-date", synth_flags.config.max_date, "Latest date (dates kind)");
  synth->add_option("--date-epsilon", synth_flags.config.epsilon,
                    "Clamp for the date proportion (dates kind)");
  synth->callback([&synth_flags] { cmd_synth(synth_flags); });

  std::string manifest_path;
  CLI::App* rerun = app.add_subcommand("rerun", "Repeat a command from its manifest");
  rerun->add_option("manifest", manifest_path, "Manifest file")
      ->required()
      ->check(CLI::ExistingFile);
  rerun->callback([&manifest_path] { cmd_rerun(manifest_path); });

  std::vector<const char*> argv;
  argv.push_back("dmr");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_cli(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
