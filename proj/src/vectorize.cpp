#include "wordfreq/vectorize.hpp"

#include <algorithm>
#include <cmath>

#include "wordfreq/errors.hpp"

namespace wordfreq {

namespace {

bool same_vocab(const VocabularyPtr& a, const VocabularyPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

DocumentVector place_counts(const FrequencyTable& table, const VocabularyPtr& vocab,
                            VectorKind kind) {
  DocumentVector v;
  v.vocab = vocab ? vocab : std::make_shared<const Vocabulary>();
  v.kind = kind;
  v.values.assign(v.vocab->size(), 0.0);
  for (const auto& [word, n] : table.entries()) {
    const auto idx = v.vocab->index_of(word);
    if (!idx) throw OutOfVocabulary(word);
    v.values[*idx] = kind == VectorKind::Binary ? 1.0 : static_cast<double>(n);
  }
  return v;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VocabularyPtr build_vocabulary(std::span<const FrequencyTable> tables) {
  std::vector<std::string> words;
  for (const auto& t : tables) {
    for (const auto& [word, n] : t.entries()) words.push_back(word);
  }
  return std::make_shared<const Vocabulary>(std::move(words));
}

DocumentVector count_vector(const FrequencyTable& table, const VocabularyPtr& vocab) {
  return place_counts(table, vocab, VectorKind::Count);
}

DocumentVector binary_vector(const FrequencyTable& table, const VocabularyPtr& vocab) {
  return place_counts(table, vocab, VectorKind::Binary);
}

std::vector<DocumentVector> tfidf_weight(std::span<const DocumentVector> vectors) {
  std::vector<DocumentVector> out;
  if (vectors.empty()) return out;
  const VocabularyPtr& vocab = vectors.front().vocab;
  for (const auto& v : vectors) {
    if (v.kind != VectorKind::Count) throw WrongKind("tf-idf needs count vectors");
    if (!same_vocab(v.vocab, vocab)) throw MixedVocabulary();
  }

  const std::size_t dims = vectors.front().values.size();
  const auto n_docs = static_cast<double>(vectors.size());
  std::vector<double> idf(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    std::size_t df = 0;
    for (const auto& v : vectors) df += v.values[i] >= 1.0 ? 1 : 0;
    idf[i] = std::log((1.0 + n_docs) / (1.0 + static_cast<double>(df))) + 1.0;
  }

  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    double total = 0.0;
    for (double x : v.values) total += x;
    DocumentVector w;
    w.vocab = v.vocab;
    w.kind = VectorKind::TfIdf;
    w.values.assign(dims, 0.0);
    if (total > 0.0) {
      for (std::size_t i = 0; i < dims; ++i) w.values[i] = v.values[i] / total * idf[i];
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<double> cosine(const DocumentVector& a, const DocumentVector& b) {
  if (!same_vocab(a.vocab, b.vocab) || a.values.size() != b.values.size()) {
    throw MixedVocabulary();
  }
  if (a.kind != b.kind) throw MixedKind();

  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    dot += a.values[i] * b.values[i];
    norm_a += a.values[i] * a.values[i];
    norm_b += b.values[i] * b.values[i];
  }
  if (norm_a == 0.0 || norm_b == 0.0) return std::nullopt;
  // norm_a * norm_b is commutative, so cosine(a, b) == cosine(b, a) bitwise.
  const double c = dot / std::sqrt(norm_a * norm_b);
  return std::clamp(c, 0.0, 1.0);
}

std::vector<std::vector<std::optional<double>>> similarity_matrix(
    std::span<const DocumentVector> vectors) {
  std::vector<std::vector<std::optional<double>>> m(
      vectors.size(), std::vector<std::optional<double>>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      m[i][j] = m[j][i] = cosine(vectors[i], vectors[j]);
    }
  }
  return m;
}

}  // namespace wordfreq
