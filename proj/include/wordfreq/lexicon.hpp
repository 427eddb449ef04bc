#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordfreq/normalize.hpp"
#include "wordfreq/tokenize_count.hpp"

namespace wordfreq {

using WordSet = std::set<std::string, std::less<>>;

/// Named word categories (e.g. positive / negative). Words are stored in
/// normalized form; a word may belong to several categories.
struct Lexicon {
  std::string name;
  std::map<std::string, WordSet, std::less<>> categories;
};

using CategoryCounts = std::map<std::string, std::uint64_t, std::less<>>;

struct ToneScore {
  CategoryCounts category_counts;
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  /// (positive - negative) / (positive + negative); empty when both are zero.
  std::optional<double> tone;
  /// Token occurrences whose word is in at least one category.
  std::uint64_t matched_total = 0;
};

/// Loads a `word,category` CSV. Words are normalized with `options` and must
/// reduce to exactly one token. Duplicate rows collapse.
Lexicon load_lexicon(const std::filesystem::path& path,
                     const NormalizeOptions& options = {});

/// Same as load_lexicon, from in-memory CSV text.
Lexicon parse_lexicon(std::string_view csv, std::string name,
                      const NormalizeOptions& options = {});

/// Occurrence-weighted: each category's result is the sum of the table
/// counts of its words.
CategoryCounts category_counts(const FrequencyTable& table, const Lexicon& lex);

ToneScore tone(const FrequencyTable& table, const Lexicon& lex,
               std::string_view pos_name, std::string_view neg_name);

/// Element i is true iff some word of term_sets[i] occurs in the table.
std::vector<bool> term_hits(const FrequencyTable& table,
                            const std::vector<WordSet>& term_sets);

}  // namespace wordfreq
