#include "dmr/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

#include "dmr/rng.hpp"
#include "dmr/sampler.hpp"

namespace dmr {

namespace {

std::string padded_name(const char* prefix, int index, int max_value) {
  std::size_t width = 1;
  for (int v = max_value - 1; v >= 10; v /= 10) ++width;
  std::string digits = std::to_string(index);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

}  // namespace

void SynthConfig::validate() const {
  if (docs < 1) throw std::invalid_argument("docs must be at least 1");
  if (topics < 1) throw std::invalid_argument("topics must be at least 1");
  if (vocab < 2) throw std::invalid_argument("vocab must be at least 2");
  if (doc_len < 1) throw std::invalid_argument("doc length must be at least 1");
  if (!(phi_concentration > 0.0)) throw std::invalid_argument("phi concentration must be positive");
  if (kind == "authors") {
    if (authors < 1) throw std::invalid_argument("authors must be at least 1");
  } else if (kind == "dates") {
    if (docs < 2) throw std::invalid_argument("dates kind requires at least 2 documents");
    if (min_date >= max_date) throw std::invalid_argument("date range must be nonempty");
    if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
      throw std::invalid_argument("epsilon must lie in (0, 0.5)");
    }
  } else {
    throw std::invalid_argument("kind must be 'authors' or 'dates'");
  }
}

SynthOutput generate_synthetic(const SynthConfig& config) {
  config.validate();
  const int T = config.topics;
  const int V = config.vocab;
  SynthOutput out;
  Rng rng(config.seed);

  out.vocabulary.reserve(static_cast<std::size_t>(V));
  for (int w = 0; w < V; ++w) out.vocabulary.push_back(padded_name("w", w, V));

  // Topic-word distributions.
  const std::vector<double> phi_prior(static_cast<std::size_t>(V), config.phi_concentration);
  out.phi_true.resize(static_cast<std::size_t>(T) * V);
  for (int t = 0; t < T; ++t) {
    std::span<double> row(out.phi_true.data() + static_cast<std::size_t>(t) * V,
                          static_cast<std::size_t>(V));
    rng.derive(0x1000 + static_cast<std::uint64_t>(t)).dirichlet(phi_prior, row);
  }

  // Feature space and lambda*.
  out.feature_names.push_back(FeatureDictionary::intercept_name());
  if (config.kind == "authors") {
    for (int a = 0; a < config.authors; ++a) {
      out.feature_names.push_back("author:" + padded_name("a", a, config.authors));
    }
    out.lambda_true = LambdaMatrix(T, 1 + config.authors);
    for (int t = 0; t < T; ++t) {
      out.lambda_true.at(t, 0) = config.intercept;
      for (int a = 0; a < config.authors; ++a) {
        out.lambda_true.at(t, 1 + a) = (a % T == t) ? config.strength : 0.0;
      }
    }
  } else {
    out.feature_names.push_back("date:log_p");
    out.feature_names.push_back("date:log_1mp");
    out.lambda_true = LambdaMatrix(T, 3);
    for (int t = 0; t < T; ++t) {
      const double m = (static_cast<double>(t) + 0.5) / static_cast<double>(T);
      out.lambda_true.at(t, 0) = config.intercept;
      out.lambda_true.at(t, 1) = config.strength * m;
      out.lambda_true.at(t, 2) = config.strength * (1.0 - m);
    }
  }

  out.records.reserve(static_cast<std::size_t>(config.docs));
  out.alpha_true.reserve(static_cast<std::size_t>(config.docs));
  out.z_true.reserve(static_cast<std::size_t>(config.docs));
  std::vector<double> theta(static_cast<std::size_t>(T));
  for (int d = 0; d < config.docs; ++d) {
    RawRecord rec;
    rec.id = padded_name("doc", d, config.docs);

    FeatureVector x;
    if (config.kind == "authors") {
      const int a = d % config.authors;
      rec.authors.push_back(padded_name("a", a, config.authors));
      x.set(1 + a, 1.0);
    } else {
      const int span = config.max_date - config.min_date;
      const int date = config.min_date +
                       static_cast<int>((static_cast<long long>(d) * span) / (config.docs - 1));
      rec.date = date;
      double p = static_cast<double>(date - config.min_date) / static_cast<double>(span);
      p = std::clamp(p, config.epsilon, 1.0 - config.epsilon);
      x.set(1, std::log(p));
      x.set(2, std::log1p(-p));
    }

    std::vector<double> alpha(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
      double dot = 0.0;
      for (const FeatureEntry& e : x.entries()) dot += e.value * out.lambda_true.at(t, e.index);
      alpha[static_cast<std::size_t>(t)] = std::exp(dot);
    }

    Rng doc_rng = rng.derive(0x2000 + static_cast<std::uint64_t>(d));
    doc_rng.dirichlet(alpha, theta);
    std::vector<int> z(static_cast<std::size_t>(config.doc_len));
    std::string text;
    for (int i = 0; i < config.doc_len; ++i) {
      const int t = doc_rng.discrete(theta);
      z[static_cast<std::size_t>(i)] = t;
      std::span<const double> row(out.phi_true.data() + static_cast<std::size_t>(t) * V,
                                  static_cast<std::size_t>(V));
      const int w = doc_rng.discrete(row);
      if (i > 0) text.push_back(' ');
      text += out.vocabulary[static_cast<std::size_t>(w)];
    }
    rec.text = std::move(text);
    out.records.push_back(std::move(rec));
    out.alpha_true.push_back(std::move(alpha));
    out.z_true.push_back(std::move(z));
  }
  return out;
}

std::string synth_corpus_jsonl(const SynthOutput& output) {
  std::string lines;
  for (const RawRecord& rec : output.records) {
    nlohmann::ordered_json j;
    j["id"] = rec.id;
    j["text"] = rec.text;
    if (!rec.authors.empty()) j["authors"] = rec.authors;
    if (!rec.citations.empty()) j["citations"] = rec.citations;
    if (rec.date) j["date"] = *rec.date;
    lines += j.dump();
    lines.push_back('\n');
  }
  return lines;
}

std::string synth_truth_json(const SynthConfig& config, const SynthOutput& output) {
  nlohmann::ordered_json j;
  j["kind"] = config.kind;
  j["topics"] = config.topics;
  j["vocab"] = config.vocab;
  j["docs"] = config.docs;
  j["doc_len"] = config.doc_len;
  j["strength"] = config.strength;
  j["intercept"] = config.intercept;
  j["phi_concentration"] = config.phi_concentration;
  j["seed"] = config.seed;
  if (config.kind == "authors") j["authors"] = config.authors;
  if (config.kind == "dates") {
    j["min_date"] = config.min_date;
    j["max_date"] = config.max_date;
    j["epsilon"] = config.epsilon;
  }
  j["vocabulary"] = output.vocabulary;
  j["feature_names"] = output.feature_names;
  j["lambda"] = output.lambda_true.data();
  j["phi"] = output.phi_true;
  nlohmann::ordered_json docs = nlohmann::ordered_json::array();
  for (std::size_t d = 0; d < output.records.size(); ++d) {
    nlohmann::ordered_json doc;
    doc["id"] = output.records[d].id;
    doc["alpha"] = output.alpha_true[d];
    doc["z"] = output.z_true[d];
    docs.push_back(std::move(doc));
  }
  j["documents"] = std::move(docs);
  return j.dump(1) + "\n";
}

}  // namespace dmr
