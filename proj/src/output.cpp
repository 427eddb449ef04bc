#include "wordfreq/output.hpp"

#include <array>
#include <charconv>
#include <system_error>

#include "json.hpp"

namespace wordfreq {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string("NA");
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_frequency(std::ostream& out, const std::vector<WordCount>& rows,
                     OutputFormat format, const std::optional<std::string>& source_id) {
  switch (format) {
    case OutputFormat::Tsv:
      if (source_id) out << "source_id\t" << *source_id << '\n';
      out << "word\tcount\n";
      for (const auto& [word, n] : rows) out << word << '\t' << n << '\n';
      break;
    case OutputFormat::Csv:
      if (source_id) out << "source_id," << csv_field(*source_id) << '\n';
      out << "word,count\n";
      for (const auto& [word, n] : rows) out << csv_field(word) << ',' << n << '\n';
      break;
    case OutputFormat::Jsonl:
      for (const auto& [word, n] : rows) {
        nlohmann::ordered_json j;
        if (source_id) j["source_id"] = *source_id;
        j["word"] = word;
        j["count"] = n;
        out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
      }
      break;
  }
}

}  // namespace wordfreq
