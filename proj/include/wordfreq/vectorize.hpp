#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wordfreq/tokenize_count.hpp"

namespace wordfreq {

/// Sorted, duplicate-free word list shared by a set of document vectors.
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Sorts and deduplicates `words`.
  explicit Vocabulary(std::vector<std::string> words);

  const std::vector<std::string>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::optional<std::size_t> index_of(std::string_view word) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.words_ == b.words_;
  }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t, FrequencyTable::Hash, std::equal_to<>> index_;
};

using VocabularyPtr = std::shared_ptr<const Vocabulary>;

enum class VectorKind { Count, Binary, TfIdf };

struct DocumentVector {
  VocabularyPtr vocab;
  std::vector<double> values;
  VectorKind kind = VectorKind::Count;
};

/// Sorted union of every word of every table.
VocabularyPtr build_vocabulary(std::span<const FrequencyTable> tables);

/// Throws OutOfVocabulary if the table holds a word missing from vocab.
DocumentVector count_vector(const FrequencyTable& table, const VocabularyPtr& vocab);
DocumentVector binary_vector(const FrequencyTable& table, const VocabularyPtr& vocab);

/// Length-normalized tf times smoothed idf ln((1 + N) / (1 + df)) + 1.
/// Every input must be a Count vector over the same vocabulary.
std::vector<DocumentVector> tfidf_weight(std::span<const DocumentVector> vectors);

/// dot(a, b) / (|a| |b|), accumulated in ascending index order. Empty when
/// either vector is all zeros.
std::optional<double> cosine(const DocumentVector& a, const DocumentVector& b);

/// Row-major N x N cosine matrix.
std::vector<std::vector<std::optional<double>>> similarity_matrix(
    std::span<const DocumentVector> vectors);

}  // namespace wordfreq
