#include "dmr/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dmr {

namespace {

constexpr double kDefaultIntercept = 10.0;
constexpr double kDefaultOther = 0.5;

[[noreturn]] void line_error(const std::string& source, std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << source << ":" << line << ": " << what;
  throw std::runtime_error(os.str());
}

}  // namespace

int Vocabulary::add(const std::string& token) {
  auto [it, inserted] = index_.try_emplace(token, static_cast<int>(tokens_.size()));
  if (inserted) tokens_.push_back(token);
  return it->second;
}

int Vocabulary::lookup(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? -1 : it->second;
}

const std::string& Vocabulary::token(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("vocabulary index out of range");
  return tokens_[static_cast<std::size_t>(index)];
}

void FeatureVector::set(int index, double value) {
  if (index < 0) throw std::invalid_argument("feature index must be nonnegative");
  if (index == 0) {
    if (value != 1.0) throw std::invalid_argument("intercept value is fixed at 1");
    return;
  }
  if (!std::isfinite(value)) throw std::invalid_argument("feature value must be finite");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const FeatureEntry& e, int i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) {
    it->value = value;
  } else {
    entries_.insert(it, FeatureEntry{index, value});
  }
}

double FeatureVector::value(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const FeatureEntry& e, int i) { return e.index < i; });
  return (it != entries_.end() && it->index == index) ? it->value : 0.0;
}

void FeatureVector::validate(int feature_count) const {
  if (entries_.empty() || entries_.front().index != 0 || entries_.front().value != 1.0) {
    throw std::logic_error("feature vector must start with intercept value 1");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i].value)) throw std::logic_error("non-finite feature value");
    if (i > 0 && entries_[i].index <= entries_[i - 1].index) {
      throw std::logic_error("feature indices must be strictly increasing");
    }
    if (entries_[i].index >= feature_count) {
      throw std::logic_error("feature index outside dictionary");
    }
  }
}

FeatureDictionary::FeatureDictionary() {
  names_.push_back(intercept_name());
  variances_.push_back(kDefaultIntercept);
  index_.emplace(intercept_name(), 0);
}

const std::string& FeatureDictionary::intercept_name() {
  static const std::string name = "(default)";
  return name;
}

int FeatureDictionary::add(const std::string& name) {
  auto [it, inserted] = index_.try_emplace(name, static_cast<int>(names_.size()));
  if (inserted) {
    names_.push_back(name);
    variances_.push_back(kDefaultOther);
  }
  return it->second;
}

int FeatureDictionary::lookup(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

const std::string& FeatureDictionary::name(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("feature index out of range");
  return names_[static_cast<std::size_t>(index)];
}

double FeatureDictionary::variance(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("feature index out of range");
  return variances_[static_cast<std::size_t>(index)];
}

void FeatureDictionary::set_variance(int index, double value) {
  if (index < 0 || index >= size()) throw std::out_of_range("feature index out of range");
  if (!(value > 0.0)) throw std::invalid_argument("prior variance must be positive");
  variances_[static_cast<std::size_t>(index)] = value;
}

void FeatureDictionary::set_variances(double default_variance, double other_variance) {
  if (!(default_variance > 0.0) || !(other_variance > 0.0)) {
    throw std::invalid_argument("prior variances must be positive");
  }
  variances_[0] = default_variance;
  for (std::size_t k = 1; k < variances_.size(); ++k) variances_[k] = other_variance;
}

std::size_t Corpus::total_tokens() const {
  std::size_t n = 0;
  for (const Document& d : documents) n += d.tokens.size();
  return n;
}

std::vector<std::string> tokenize(const std::string& text, const IngestOptions& options) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      if (!options.stopwords.count(current)) out.push_back(current);
      current.clear();
    }
  };
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      flush();
    } else {
      current.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  flush();
  return out;
}

std::vector<RawRecord> parse_corpus_stream(std::istream& in, const std::string& source_name) {
  std::vector<RawRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      line_error(source_name, line_number, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) line_error(source_name, line_number, "record is not a JSON object");

    RawRecord rec;
    for (const auto& [key, value] : j.items()) {
      if (key == "id") {
        if (!value.is_string()) line_error(source_name, line_number, "field 'id' must be a string");
        rec.id = value.get<std::string>();
      } else if (key == "text") {
        if (!value.is_string()) line_error(source_name, line_number, "field 'text' must be a string");
        rec.text = value.get<std::string>();
      } else if (key == "authors" || key == "citations") {
        if (!value.is_array()) {
          line_error(source_name, line_number, "field '" + key + "' must be a string array");
        }
        std::vector<std::string> items;
        for (const auto& entry : value) {
          if (!entry.is_string()) {
            line_error(source_name, line_number, "field '" + key + "' must contain only strings");
          }
          items.push_back(entry.get<std::string>());
        }
        (key == "authors" ? rec.authors : rec.citations) = std::move(items);
      } else if (key == "date") {
        if (!value.is_number_integer()) {
          line_error(source_name, line_number, "field 'date' must be an integer");
        }
        rec.date = value.get<int>();
      } else {
        line_error(source_name, line_number, "unknown field '" + key + "'");
      }
    }
    if (!j.contains("id")) line_error(source_name, line_number, "missing field 'id'");
    if (!j.contains("text")) line_error(source_name, line_number, "missing field 'text'");
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<RawRecord> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return parse_corpus_stream(in, path);
}

Corpus build_corpus(const std::vector<RawRecord>& records, const IngestOptions& options) {
  Corpus corpus;
  corpus.documents.reserve(records.size());
  for (const RawRecord& rec : records) {
    Document doc;
    doc.id = rec.id;
    doc.authors = rec.authors;
    doc.citations = rec.citations;
    doc.date = rec.date;
    for (const std::string& token : tokenize(rec.text, options)) {
      doc.tokens.push_back(corpus.vocabulary.add(token));
    }
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

Corpus ingest(const std::string& path, const IngestOptions& options) {
  return build_corpus(read_corpus_file(path), options);
}

namespace {

Corpus encode_label_features(Corpus corpus, int min_count, const std::string& prefix,
                             std::vector<std::string> Document::* labels) {
  std::unordered_map<std::string, int> doc_counts;
  for (const Document& doc : corpus.documents) {
    std::set<std::string> unique(((doc.*labels)).begin(), ((doc.*labels)).end());
    for (const std::string& label : unique) ++doc_counts[label];
  }
  for (Document& doc : corpus.documents) {
    for (const std::string& label : doc.*labels) {
      auto it = doc_counts.find(label);
      if (it != doc_counts.end() && it->second >= min_count) {
        doc.features.set(corpus.features.add(prefix + label), 1.0);
      }
    }
  }
  return corpus;
}

}  // namespace

Corpus encode_author_features(Corpus corpus, int min_papers) {
  return encode_label_features(std::move(corpus), min_papers, "author:", &Document::authors);
}

Corpus encode_citation_features(Corpus corpus, int min_citations) {
  return encode_label_features(std::move(corpus), min_citations, "cite:", &Document::citations);
}

namespace {

double date_proportion(int date, const DateMeta& meta) {
  double p = static_cast<double>(date - meta.min_date) /
             static_cast<double>(meta.max_date - meta.min_date);
  return std::clamp(p, meta.epsilon, 1.0 - meta.epsilon);
}

}  // namespace

Corpus encode_date_features(Corpus corpus, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
    throw std::invalid_argument("date epsilon must lie in (0, 0.5)");
  }
  bool any = false;
  int min_date = 0;
  int max_date = 0;
  for (const Document& doc : corpus.documents) {
    if (!doc.date) continue;
    if (!any) {
      min_date = max_date = *doc.date;
      any = true;
    } else {
      min_date = std::min(min_date, *doc.date);
      max_date = std::max(max_date, *doc.date);
    }
  }
  if (!any) throw std::invalid_argument("date features require dated documents");
  if (min_date == max_date) {
    throw std::invalid_argument("date features require at least two distinct dates");
  }
  const DateMeta meta{min_date, max_date, epsilon};
  const int log_p = corpus.features.add("date:log_p");
  const int log_1mp = corpus.features.add("date:log_1mp");
  for (Document& doc : corpus.documents) {
    if (!doc.date) continue;
    const double p = date_proportion(*doc.date, meta);
    doc.features.set(log_p, std::log(p));
    doc.features.set(log_1mp, std::log1p(-p));
  }
  corpus.features.date_meta = meta;
  return corpus;
}

Corpus filter_by_date(Corpus corpus, int min_date) {
  std::erase_if(corpus.documents,
                [min_date](const Document& d) { return d.date && *d.date < min_date; });
  return corpus;
}

Corpus filter_require_modality(Corpus corpus, const std::string& kind) {
  auto lacks = [&kind](const Document& d) -> bool {
    if (kind == "authors") return d.authors.empty();
    if (kind == "citations") return d.citations.empty();
    if (kind == "dates") return !d.date.has_value();
    throw std::invalid_argument("unknown modality: " + kind);
  };
  std::erase_if(corpus.documents, lacks);
  return corpus;
}

FeatureVector encode_with_dictionary(const RawRecord& record, const FeatureDictionary& dict) {
  FeatureVector features;
  for (const std::string& author : record.authors) {
    const int k = dict.lookup("author:" + author);
    if (k > 0) features.set(k, 1.0);
  }
  for (const std::string& cite : record.citations) {
    const int k = dict.lookup("cite:" + cite);
    if (k > 0) features.set(k, 1.0);
  }
  if (record.date && dict.date_meta) {
    const int log_p = dict.lookup("date:log_p");
    const int log_1mp = dict.lookup("date:log_1mp");
    if (log_p > 0 && log_1mp > 0) {
      const double p = date_proportion(*record.date, *dict.date_meta);
      features.set(log_p, std::log(p));
      features.set(log_1mp, std::log1p(-p));
    }
  }
  return features;
}

Document encode_held_out(const RawRecord& record, const Vocabulary& vocab,
                         const FeatureDictionary& dict, const IngestOptions& options,
                         int* dropped_tokens) {
  Document doc;
  doc.id = record.id;
  doc.authors = record.authors;
  doc.citations = record.citations;
  doc.date = record.date;
  int dropped = 0;
  for (const std::string& token : tokenize(record.text, options)) {
    const int w = vocab.lookup(token);
    if (w >= 0) {
      doc.tokens.push_back(w);
    } else {
      ++dropped;
    }
  }
  if (dropped_tokens) *dropped_tokens += dropped;
  doc.features = encode_with_dictionary(record, dict);
  return doc;
}

}  // namespace dmr
