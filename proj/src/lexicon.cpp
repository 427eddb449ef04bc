#include "wordfreq/lexicon.hpp"

#include <algorithm>

#include "wordfreq/errors.hpp"
#include "wordfreq/ingest.hpp"

namespace wordfreq {

namespace {

// One CSV line, RFC 4180 quoting. Quoted fields may not span lines.
std::optional<std::vector<std::string>> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      if (!field.empty() || was_quoted) return std::nullopt;
      quoted = was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else {
      if (was_quoted) return std::nullopt;
      field.push_back(c);
    }
  }
  if (quoted) return std::nullopt;
  fields.push_back(std::move(field));
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Lexicon parse_lexicon(std::string_view csv, std::string name,
                      const NormalizeOptions& options) {
  Lexicon lex;
  lex.name = std::move(name);
  const auto lines = split_records(csv);
  if (lines.empty()) throw MalformedRow(1, "missing header 'word,category'");

  std::string_view header = lines[0];
  if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
  const auto head = split_csv_line(header);
  if (!head || head->size() != 2 || trim((*head)[0]) != "word" ||
      trim((*head)[1]) != "category") {
    throw MalformedRow(1, "expected header 'word,category'");
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t row = i + 1;
    if (trim(lines[i]).empty()) continue;
    const auto fields = split_csv_line(lines[i]);
    if (!fields) throw MalformedRow(row, "unbalanced quotes");
    if (fields->size() != 2) {
      throw MalformedRow(row, "expected 2 columns, found " +
                                  std::to_string(fields->size()));
    }
    const std::string raw_word((*fields)[0]);
    const std::string category(trim((*fields)[1]));
    if (category.empty()) throw MalformedRow(row, "empty category");

    const TokenStream toks = tokenize(normalize(raw_word, options));
    if (toks.tokens.empty()) throw MalformedRow(row, "empty word");
    if (toks.tokens.size() != 1) throw MultiTokenWord(row, raw_word);
    lex.categories[category].insert(toks.tokens.front());
  }
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path, const NormalizeOptions& options) {
  const Document doc = read_text(path);
  return parse_lexicon(doc.buffer(), path.stem().string(), options);
}

CategoryCounts category_counts(const FrequencyTable& table, const Lexicon& lex) {
  CategoryCounts out;
  for (const auto& [category, words] : lex.categories) {
    std::uint64_t sum = 0;
    for (const auto& w : words) sum += table.count(w);
    out.emplace(category, sum);
  }
  return out;
}

ToneScore tone(const FrequencyTable& table, const Lexicon& lex,
               std::string_view pos_name, std::string_view neg_name) {
  for (auto name : {pos_name, neg_name}) {
    if (lex.categories.find(name) == lex.categories.end()) {
      throw UnknownCategory(std::string(name));
    }
  }
  ToneScore score;
  score.category_counts = category_counts(table, lex);
  score.positive = score.category_counts.find(pos_name)->second;
  score.negative = score.category_counts.find(neg_name)->second;
  if (const auto denom = score.positive + score.negative; denom != 0) {
    score.tone = (static_cast<double>(score.positive) -
                  static_cast<double>(score.negative)) /
                 static_cast<double>(denom);
  }

  WordSet matched;
  for (const auto& [category, words] : lex.categories) {
    for (const auto& w : words) {
      if (table.contains(w)) matched.insert(w);
    }
  }
  for (const auto& w : matched) score.matched_total += table.count(w);
  return score;
}

std::vector<bool> term_hits(const FrequencyTable& table,
                            const std::vector<WordSet>& term_sets) {
  std::vector<bool> hits;
  hits.reserve(term_sets.size());
  for (const auto& set : term_sets) {
    hits.push_back(std::any_of(set.begin(), set.end(),
                               [&](const std::string& w) { return table.contains(w); }));
  }
  return hits;
}

}  // namespace wordfreq
