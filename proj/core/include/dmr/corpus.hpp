#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace dmr {

class Vocabulary {
 public:
  /// Returns the token's index, inserting it if new.
  int add(const std::string& token);
  /// Returns -1 when absent.
  int lookup(const std::string& token) const;
  const std::string& token(int index) const;
  int size() const { return static_cast<int>(tokens_.size()); }
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

struct FeatureEntry {
  int index;
  double value;
};

/// Sparse feature vector. Index 0 is the always-present intercept with
/// value 1; remaining indices are strictly increasing.
class FeatureVector {
 public:
  FeatureVector() : entries_{{0, 1.0}} {}

  /// Inserts or overwrites the value at a feature index, keeping entries
  /// sorted. The intercept value cannot be changed.
  void set(int index, double value);
  /// Returns 0 for absent indices.
  double value(int index) const;
  const std::vector<FeatureEntry>& entries() const { return entries_; }
  /// Throws when an invariant is broken (intercept first, sorted unique
  /// indices, finite values, indices below feature_count).
  void validate(int feature_count) const;

 private:
  std::vector<FeatureEntry> entries_;
};

struct DateMeta {
  int min_date = 0;
  int max_date = 0;
  double epsilon = 1e-3;
};

/// Feature-name dictionary with per-feature prior variance. Index 0 is the
/// reserved intercept. When date features are encoded the corpus date range
/// is kept here so held-out documents can be encoded consistently.
class FeatureDictionary {
 public:
  FeatureDictionary();

  /// Returns the feature's index, inserting it if new. New non-intercept
  /// features start at the non-default variance.
  int add(const std::string& name);
  /// Returns -1 when absent.
  int lookup(const std::string& name) const;
  const std::string& name(int index) const;
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  double variance(int index) const;
  void set_variance(int index, double value);
  /// Intercept gets `default_variance`, every other feature `other_variance`.
  void set_variances(double default_variance, double other_variance);
  const std::vector<double>& variances() const { return variances_; }

  static const std::string& intercept_name();

  std::optional<DateMeta> date_meta;

 private:
  std::vector<std::string> names_;
  std::vector<double> variances_;
  std::unordered_map<std::string, int> index_;
};

/// One corpus-file record before tokenization.
struct RawRecord {
  std::string id;
  std::string text;
  std::vector<std::string> authors;
  std::vector<std::string> citations;
  std::optional<int> date;
};

struct Document {
  std::string id;
  std::vector<int> tokens;
  FeatureVector features;
  std::vector<std::string> authors;
  std::vector<std::string> citations;
  std::optional<int> date;

  int length() const { return static_cast<int>(tokens.size()); }
};

struct Corpus {
  std::vector<Document> documents;
  Vocabulary vocabulary;
  FeatureDictionary features;

  std::size_t total_tokens() const;
  int num_docs() const { return static_cast<int>(documents.size()); }
};

struct IngestOptions {
  std::unordered_set<std::string> stopwords;
};

/// Lowercased whitespace-split tokens with stopwords removed.
std::vector<std::string> tokenize(const std::string& text, const IngestOptions& options);

/// Parses JSON-lines records: fields id, text, optional authors, citations,
/// date. Unknown fields and type mismatches are errors naming the line.
std::vector<RawRecord> parse_corpus_stream(std::istream& in, const std::string& source_name);
std::vector<RawRecord> read_corpus_file(const std::string& path);

Corpus build_corpus(const std::vector<RawRecord>& records, const IngestOptions& options = {});
Corpus ingest(const std::string& path, const IngestOptions& options = {});

/// One binary feature "author:NAME" per author appearing on at least
/// min_papers documents. Idempotent.
Corpus encode_author_features(Corpus corpus, int min_papers);
/// One binary feature "cite:NAME" per citation target referenced by at least
/// min_citations documents. Idempotent.
Corpus encode_citation_features(Corpus corpus, int min_citations);
/// Two real features "date:log_p" and "date:log_1mp" from the document's
/// position p in the corpus date range, clamped into [epsilon, 1-epsilon].
/// Throws when no two distinct dates exist. Stores the date range in the
/// dictionary. Idempotent.
Corpus encode_date_features(Corpus corpus, double epsilon);
/// Removes documents dated earlier than min_date; undated documents are
/// kept. The vocabulary is left as built.
Corpus filter_by_date(Corpus corpus, int min_date);
/// Removes documents lacking the given metadata modality
/// ("authors" | "citations" | "dates").
Corpus filter_require_modality(Corpus corpus, const std::string& kind);

/// Feature vector for a record under an existing dictionary: features absent
/// from the dictionary are dropped; date features use the stored date range.
FeatureVector encode_with_dictionary(const RawRecord& record, const FeatureDictionary& dict);

/// Held-out document in a model's vocabulary and feature space. Tokens
/// missing from the vocabulary are dropped and counted via dropped_tokens.
Document encode_held_out(const RawRecord& record, const Vocabulary& vocab,
                         const FeatureDictionary& dict, const IngestOptions& options,
                         int* dropped_tokens = nullptr);

}  // namespace dmr
