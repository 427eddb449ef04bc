#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordfreq/ingest.hpp"

namespace wordfreq {

constexpr bool is_token_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

/// Calls fn(std::string_view) for each maximal run of non-whitespace bytes.
template <typename Fn>
void for_each_token(std::string_view text, Fn&& fn) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && is_token_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < n && !is_token_space(text[i])) ++i;
    if (i > start) fn(text.substr(start, i - start));
  }
}

struct TokenStream {
  std::vector<std::string> tokens;
};

TokenStream tokenize(std::string_view text);

/// Word -> occurrence count. Stored counts are always >= 1 and
/// total_tokens() is the sum of all counts.
class FrequencyTable {
 public:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  using Map = std::unordered_map<std::string, std::uint64_t, Hash, std::equal_to<>>;

  FrequencyTable() = default;
  FrequencyTable(std::initializer_list<std::pair<std::string_view, std::uint64_t>> init);

  /// Adds n occurrences of word; n == 0 is a no-op.
  void add(std::string_view word, std::uint64_t n = 1);
  /// In-place merge: every count of other is added to this table.
  void merge(const FrequencyTable& other);

  std::uint64_t count(std::string_view word) const;
  bool contains(std::string_view word) const { return count(word) != 0; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  std::uint64_t total_tokens() const noexcept { return total_; }
  bool empty() const noexcept { return entries_.empty(); }
  const Map& entries() const noexcept { return entries_; }

  friend bool operator==(const FrequencyTable& a, const FrequencyTable& b) {
    return a.total_ == b.total_ && a.entries_ == b.entries_;
  }

 private:
  Map entries_;
  std::uint64_t total_ = 0;
};

FrequencyTable count_onepass(const TokenStream& tokens);

/// count_onepass(tokenize(text)) without materializing the token list.
FrequencyTable count_text(std::string_view text);

/// Counts every record into its own table and combines the tables with
/// merge_tables. Records are split across `jobs` worker threads; the result
/// does not depend on `jobs`. Throws WrongMode unless doc is in Records mode.
FrequencyTable count_sharded(const Document& doc, unsigned jobs = 1);

FrequencyTable merge_tables(const FrequencyTable& a, const FrequencyTable& b);

enum class SortKey { Alpha, CountDesc };

using WordCount = std::pair<std::string, std::uint64_t>;

/// Alpha: ascending by code point. CountDesc: descending count, ties broken
/// by ascending code point.
std::vector<WordCount> sorted_view(const FrequencyTable& table, SortKey key);

}  // namespace wordfreq
