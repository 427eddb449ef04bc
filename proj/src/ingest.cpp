#include "wordfreq/ingest.hpp"

#include <fstream>
#include <iterator>
#include <stdexcept>

#include <unicode/utf8.h>

#include "wordfreq/errors.hpp"

namespace wordfreq {

namespace {

constexpr std::string_view kReplacementChar = "\xEF\xBF\xBD";

std::string slurp(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw FileNotFound(path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileNotFound(path.string());
  }
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw FileNotFound(path.string());
  }
  return bytes;
}

}  // namespace

Document::Document(std::string source_id,
                   std::variant<std::string, std::vector<std::string>> content,
                   std::uint64_t byte_len, std::uint64_t replaced)
    : source_id_(std::move(source_id)),
      content_(std::move(content)),
      byte_len_(byte_len),
      replaced_(replaced) {}

Document Document::whole_buffer(std::string source_id, std::string buffer,
                                std::uint64_t byte_len,
                                std::uint64_t replaced_sequences) {
  return Document(std::move(source_id), std::move(buffer), byte_len,
                  replaced_sequences);
}

Document Document::records(std::string source_id,
                           std::vector<std::string> records,
                           std::uint64_t byte_len,
                           std::uint64_t replaced_sequences) {
  for (const auto& r : records) {
    if (r.find('\n') != std::string::npos) {
      throw std::invalid_argument("record contains a line feed");
    }
  }
  return Document(std::move(source_id), std::move(records), byte_len,
                  replaced_sequences);
}

DocumentMode Document::mode() const noexcept {
  return std::holds_alternative<std::string>(content_) ? DocumentMode::WholeBuffer
                                                       : DocumentMode::Records;
}

const std::string& Document::buffer() const {
  if (const auto* b = std::get_if<std::string>(&content_)) return *b;
  throw WrongMode("document '" + source_id_ + "' is not in whole-buffer mode");
}

const std::vector<std::string>& Document::records() const {
  if (const auto* r = std::get_if<std::vector<std::string>>(&content_)) return *r;
  throw WrongMode("document '" + source_id_ + "' is not in records mode");
}

DecodedText decode_utf8_lossy(std::string_view bytes) {
  DecodedText out;
  out.text.reserve(bytes.size());
  const auto* s = reinterpret_cast<const std::uint8_t*>(bytes.data());
  const auto length = static_cast<std::int64_t>(bytes.size());
  std::int64_t i = 0;
  while (i < length) {
    // ASCII run.
    if (s[i] < 0x80) {
      std::int64_t j = i + 1;
      while (j < length && s[j] < 0x80) ++j;
      out.text.append(bytes.data() + i, static_cast<std::size_t>(j - i));
      i = j;
      continue;
    }
    const std::int64_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      out.text.append(kReplacementChar);
      ++out.replaced;
    } else {
      out.text.append(bytes.data() + start, static_cast<std::size_t>(i - start));
    }
  }
  return out;
}

std::vector<std::string> split_records(std::string_view text) {
  std::vector<std::string> records;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    const bool terminated = nl != std::string_view::npos;
    if (!terminated) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    records.emplace_back(line);
    pos = terminated ? nl + 1 : nl;
  }
  return records;
}

Document read_text(const std::filesystem::path& path) {
  std::string bytes = slurp(path);
  const auto byte_len = static_cast<std::uint64_t>(bytes.size());
  DecodedText decoded = decode_utf8_lossy(bytes);
  return Document::whole_buffer(path.string(), std::move(decoded.text), byte_len,
                                decoded.replaced);
}

Document read_records(const std::filesystem::path& path) {
  std::string bytes = slurp(path);
  const auto byte_len = static_cast<std::uint64_t>(bytes.size());
  DecodedText decoded = decode_utf8_lossy(bytes);
  return Document::records(path.string(), split_records(decoded.text), byte_len,
                           decoded.replaced);
}

}  // namespace wordfreq
