#include "wordfreq/tokenize_count.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace wordfreq {

TokenStream tokenize(std::string_view text) {
  TokenStream out;
  for_each_token(text, [&](std::string_view tok) { out.tokens.emplace_back(tok); });
  return out;
}

FrequencyTable::FrequencyTable(
    std::initializer_list<std::pair<std::string_view, std::uint64_t>> init) {
  for (const auto& [word, n] : init) add(word, n);
}

void FrequencyTable::add(std::string_view word, std::uint64_t n) {
  if (n == 0) return;
  if (auto it = entries_.find(word); it != entries_.end()) {
    it->second += n;
  } else {
    entries_.emplace(std::string(word), n);
  }
  total_ += n;
}

void FrequencyTable::merge(const FrequencyTable& other) {
  for (const auto& [word, n] : other.entries_) add(word, n);
}

std::uint64_t FrequencyTable::count(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? 0 : it->second;
}

FrequencyTable count_onepass(const TokenStream& tokens) {
  FrequencyTable table;
  for (const auto& tok : tokens.tokens) table.add(tok);
  return table;
}

FrequencyTable count_text(std::string_view text) {
  FrequencyTable table;
  for_each_token(text, [&](std::string_view tok) { table.add(tok); });
  return table;
}

FrequencyTable merge_tables(const FrequencyTable& a, const FrequencyTable& b) {
  FrequencyTable out = a;
  out.merge(b);
  return out;
}

namespace {

FrequencyTable count_shard_range(const std::vector<std::string>& records,
                                 std::size_t begin, std::size_t end) {
  FrequencyTable acc;
  for (std::size_t i = begin; i < end; ++i) {
    acc.merge(count_text(records[i]));
  }
  return acc;
}

}  // namespace

FrequencyTable count_sharded(const Document& doc, unsigned jobs) {
  const auto& records = doc.records();
  const std::size_t n = records.size();
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs == 0 ? 1 : jobs, n));
  if (workers == 1) return count_shard_range(records, 0, n);

  std::vector<FrequencyTable> partial(workers);
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          partial[w] = count_shard_range(records, w * n / workers, (w + 1) * n / workers);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  // Pairwise tree reduction.
  for (std::size_t stride = 1; stride < workers; stride *= 2) {
    for (std::size_t i = 0; i + stride < workers; i += 2 * stride) {
      partial[i].merge(partial[i + stride]);
    }
  }
  return std::move(partial[0]);
}

std::vector<WordCount> sorted_view(const FrequencyTable& table, SortKey key) {
  std::vector<WordCount> rows(table.entries().begin(), table.entries().end());
  if (key == SortKey::Alpha) {
    std::sort(rows.begin(), rows.end(),
              [](const WordCount& a, const WordCount& b) { return a.first < b.first; });
  } else {
    std::sort(rows.begin(), rows.end(), [](const WordCount& a, const WordCount& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
  }
  return rows;
}

}  // namespace wordfreq
