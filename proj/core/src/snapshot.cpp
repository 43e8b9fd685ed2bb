#include "dmr/snapshot.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "dmr/digest.hpp"

namespace dmr {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

std::string kind_name(ModelSnapshot::Kind kind) {
  return kind == ModelSnapshot::Kind::dmr ? "dmr" : "lda";
}

ModelSnapshot::Kind kind_from_name(const std::string& name) {
  if (name == "dmr") return ModelSnapshot::Kind::dmr;
  if (name == "lda") return ModelSnapshot::Kind::lda;
  throw std::runtime_error("unknown model kind: " + name);
}

std::string smoothing_name(PhiSmoothing smoothing) {
  return smoothing == PhiSmoothing::vocabulary ? "vocabulary" : "topic_count";
}

PhiSmoothing smoothing_from_name(const std::string& name) {
  if (name == "vocabulary") return PhiSmoothing::vocabulary;
  if (name == "topic_count") return PhiSmoothing::topic_count;
  throw std::runtime_error("unknown smoothing: " + name);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::uint64_t file_digest(const std::string& path) { return fnv1a_64(read_file(path)); }

std::string digest_hex(std::uint64_t digest) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(digest));
  return std::string(buffer);
}

std::uint64_t parse_digest_hex(const std::string& hex) {
  if (hex.size() != 16) throw std::runtime_error("digest must be 16 hex characters");
  return std::stoull(hex, nullptr, 16);
}

std::string format_double(double value) {
  return Json(value).dump();
}

std::string snapshot_to_json(const ModelSnapshot& snapshot) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind_name(snapshot.kind);

  Json config;
  config["topics"] = snapshot.config.topics;
  config["beta"] = snapshot.config.beta;
  config["sigma_default"] = snapshot.config.sigma_default;
  config["sigma_other"] = snapshot.config.sigma_other;
  config["iterations"] = snapshot.config.iterations;
  config["burn_in"] = snapshot.config.burn_in;
  config["optimize_interval"] = snapshot.config.optimize_interval;
  config["seed"] = snapshot.config.seed;
  config["smoothing"] = smoothing_name(snapshot.config.smoothing);
  j["config"] = std::move(config);

  j["vocabulary"] = snapshot.vocabulary.tokens();

  Json features;
  features["names"] = snapshot.features.names();
  features["variances"] = snapshot.features.variances();
  if (snapshot.features.date_meta) {
    Json meta;
    meta["min_date"] = snapshot.features.date_meta->min_date;
    meta["max_date"] = snapshot.features.date_meta->max_date;
    meta["epsilon"] = snapshot.features.date_meta->epsilon;
    features["date_meta"] = std::move(meta);
  }
  j["features"] = std::move(features);

  j["lambda"] = snapshot.lambda.data();
  j["topic_word"] = snapshot.topic_word;
  j["topic_totals"] = snapshot.topic_totals;

  Json trace = Json::array();
  for (const TraceEntry& e : snapshot.trace) {
    Json entry;
    entry["iteration"] = e.iteration;
    entry["before"] = e.before;
    entry["after"] = e.after;
    trace.push_back(std::move(entry));
  }
  j["trace"] = std::move(trace);

  Json warnings;
  warnings["alpha_capped"] = snapshot.warnings.alpha_capped;
  warnings["line_search_failed"] = snapshot.warnings.line_search_failed;
  j["warnings"] = std::move(warnings);

  j["corpus_digest"] = digest_hex(snapshot.corpus_digest);
  return j.dump(1) + "\n";
}

ModelSnapshot snapshot_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid snapshot JSON: ") + e.what());
  }
  if (j.value("format_version", -1) != kFormatVersion) {
    throw std::runtime_error("unsupported snapshot format version");
  }

  ModelSnapshot snapshot;
  snapshot.kind = kind_from_name(j.at("kind").get<std::string>());

  const Json& config = j.at("config");
  snapshot.config.topics = config.at("topics").get<int>();
  snapshot.config.beta = config.at("beta").get<double>();
  snapshot.config.sigma_default = config.at("sigma_default").get<double>();
  snapshot.config.sigma_other = config.at("sigma_other").get<double>();
  snapshot.config.iterations = config.at("iterations").get<int>();
  snapshot.config.burn_in = config.at("burn_in").get<int>();
  snapshot.config.optimize_interval = config.at("optimize_interval").get<int>();
  snapshot.config.seed = config.at("seed").get<std::uint64_t>();
  snapshot.config.smoothing = smoothing_from_name(config.at("smoothing").get<std::string>());

  for (const auto& token : j.at("vocabulary")) {
    snapshot.vocabulary.add(token.get<std::string>());
  }

  const Json& features = j.at("features");
  const auto names = features.at("names").get<std::vector<std::string>>();
  const auto variances = features.at("variances").get<std::vector<double>>();
  if (names.empty() || names[0] != FeatureDictionary::intercept_name() ||
      names.size() != variances.size()) {
    throw std::runtime_error("malformed feature dictionary in snapshot");
  }
  for (std::size_t k = 1; k < names.size(); ++k) snapshot.features.add(names[k]);
  for (std::size_t k = 0; k < variances.size(); ++k) {
    snapshot.features.set_variance(static_cast<int>(k), variances[k]);
  }
  if (features.contains("date_meta")) {
    const Json& meta = features.at("date_meta");
    snapshot.features.date_meta = DateMeta{meta.at("min_date").get<int>(),
                                           meta.at("max_date").get<int>(),
                                           meta.at("epsilon").get<double>()};
  }

  const int topics = snapshot.config.topics;
  const auto lambda_flat = j.at("lambda").get<std::vector<double>>();
  if (topics < 1 || lambda_flat.size() % static_cast<std::size_t>(topics) != 0) {
    throw std::runtime_error("malformed lambda matrix in snapshot");
  }
  const int K = static_cast<int>(lambda_flat.size() / static_cast<std::size_t>(topics));
  if (K != snapshot.features.size()) {
    throw std::runtime_error("lambda feature dimension disagrees with the dictionary");
  }
  snapshot.lambda = LambdaMatrix(topics, K);
  snapshot.lambda.data() = lambda_flat;

  snapshot.topic_word = j.at("topic_word").get<std::vector<std::int64_t>>();
  snapshot.topic_totals = j.at("topic_totals").get<std::vector<std::int64_t>>();
  const std::size_t vocab = static_cast<std::size_t>(snapshot.vocabulary.size());
  if (snapshot.topic_word.size() != vocab * static_cast<std::size_t>(topics) ||
      snapshot.topic_totals.size() != static_cast<std::size_t>(topics)) {
    throw std::runtime_error("malformed count tables in snapshot");
  }

  for (const auto& entry : j.at("trace")) {
    snapshot.trace.push_back(TraceEntry{entry.at("iteration").get<int>(),
                                        entry.at("before").get<double>(),
                                        entry.at("after").get<double>()});
  }
  const Json& warnings = j.at("warnings");
  snapshot.warnings.alpha_capped = warnings.at("alpha_capped").get<bool>();
  snapshot.warnings.line_search_failed = warnings.at("line_search_failed").get<bool>();
  snapshot.corpus_digest = parse_digest_hex(j.at("corpus_digest").get<std::string>());
  return snapshot;
}

void save_snapshot(const ModelSnapshot& snapshot, const std::string& path) {
  write_file(path, snapshot_to_json(snapshot));
}

ModelSnapshot load_snapshot(const std::string& path) {
  return snapshot_from_json(read_file(path));
}

std::uint64_t RunManifest::run_digest() const {
  Json j;
  j["command"] = command;
  Json flag_obj = Json::object();
  for (const auto& [name, value] : flags) flag_obj[name] = value;
  j["flags"] = std::move(flag_obj);
  Json input_obj = Json::object();
  for (const auto& [path, digest] : inputs) input_obj[path] = digest;
  j["inputs"] = std::move(input_obj);
  return fnv1a_64(j.dump());
}

std::string manifest_to_json(const RunManifest& manifest) {
  Json j;
  j["command"] = manifest.command;
  Json flags = Json::object();
  for (const auto& [name, value] : manifest.flags) flags[name] = value;
  j["flags"] = std::move(flags);
  Json inputs = Json::object();
  for (const auto& [path, digest] : manifest.inputs) inputs[path] = digest;
  j["inputs"] = std::move(inputs);
  if (!manifest.fold_assignment.empty()) j["fold_assignment"] = manifest.fold_assignment;
  j["run_digest"] = digest_hex(manifest.run_digest());
  j["timestamp"] = manifest.timestamp;
  return j.dump(1) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid manifest JSON: ") + e.what());
  }
  RunManifest manifest;
  manifest.command = j.at("command").get<std::string>();
  for (const auto& [name, value] : j.at("flags").items()) {
    manifest.flags.emplace_back(name, value.get<std::string>());
  }
  for (const auto& [path, digest] : j.at("inputs").items()) {
    manifest.inputs.emplace_back(path, digest.get<std::string>());
  }
  if (j.contains("fold_assignment")) {
    manifest.fold_assignment = j.at("fold_assignment").get<std::vector<int>>();
  }
  manifest.timestamp = j.value("timestamp", std::string());
  return manifest;
}

void save_manifest(const RunManifest& manifest, const std::string& path) {
  write_file(path, manifest_to_json(manifest));
}

RunManifest load_manifest(const std::string& path) {
  return manifest_from_json(read_file(path));
}

std::string current_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buffer);
}

}  // namespace dmr
