#include "wordfreq/normalize.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace wordfreq {

namespace {

constexpr std::string_view kFullPunct = R"(!"#$%&'()*+,-./:;<=>?@[\]^_`{|}~)";
constexpr std::string_view kStataPunct = R"(!#$%&'()*+,-./:;<=>?@[\]^_`{}~)";
constexpr std::string_view kPythonPunct = R"(!"#%&'()*+,-./:;<=>?@[\]^_`{}~)";

using ByteTable = std::array<bool, 256>;

constexpr ByteTable make_table(std::string_view chars) {
  ByteTable t{};
  for (char c : chars) t[static_cast<unsigned char>(c)] = true;
  t['\t'] = t['\n'] = t['\r'] = true;
  return t;
}

constexpr ByteTable kFullTable = make_table(kFullPunct);
constexpr ByteTable kStataTable = make_table(kStataPunct);
constexpr ByteTable kPythonTable = make_table(kPythonPunct);

const ByteTable& table_for(PunctPreset preset) {
  switch (preset) {
    case PunctPreset::Stata:
      return kStataTable;
    case PunctPreset::Python:
      return kPythonTable;
    case PunctPreset::Full:
      break;
  }
  return kFullTable;
}

void append_utf8(std::string& out, UChar32 c) {
  std::array<std::uint8_t, U8_MAX_LENGTH> buf{};
  std::int32_t n = 0;
  U8_APPEND_UNSAFE(buf.data(), n, c);
  out.append(reinterpret_cast<const char*>(buf.data()), static_cast<std::size_t>(n));
}

}  // namespace

std::string_view punctuation_chars(PunctPreset preset) noexcept {
  switch (preset) {
    case PunctPreset::Stata:
      return kStataPunct;
    case PunctPreset::Python:
      return kPythonPunct;
    case PunctPreset::Full:
      break;
  }
  return kFullPunct;
}

std::string lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int64_t>(text.size());
  std::int64_t i = 0;
  while (i < length) {
    const std::uint8_t b = s[i];
    if (b < 0x80) {
      out.push_back(static_cast<char>(b >= 'A' && b <= 'Z' ? b + ('a' - 'A') : b));
      ++i;
      continue;
    }
    const std::int64_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      out.append(text.data() + start, static_cast<std::size_t>(i - start));
      continue;
    }
    const UChar32 lower = u_tolower(c);
    if (lower == c) {
      out.append(text.data() + start, static_cast<std::size_t>(i - start));
    } else {
      append_utf8(out, lower);
    }
  }
  return out;
}

std::string strip_punctuation(std::string_view text, const NormalizeOptions& options) {
  const ByteTable& table = table_for(options.preset);
  std::string out;
  out.reserve(text.size());
  if (!options.unicode_punct) {
    // Multi-byte UTF-8 sequences never contain ASCII bytes, so a bytewise
    // scan touches only ASCII characters.
    for (char ch : text) {
      out.push_back(table[static_cast<unsigned char>(ch)] ? ' ' : ch);
    }
    return out;
  }
  const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int64_t>(text.size());
  std::int64_t i = 0;
  while (i < length) {
    const std::uint8_t b = s[i];
    if (b < 0x80) {
      out.push_back(table[b] || u_ispunct(b) ? ' ' : static_cast<char>(b));
      ++i;
      continue;
    }
    const std::int64_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c >= 0 && u_ispunct(c)) {
      out.push_back(' ');
    } else {
      out.append(text.data() + start, static_cast<std::size_t>(i - start));
    }
  }
  return out;
}

std::string to_nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU NFC normalizer unavailable: ") +
                             u_errorName(status));
  }
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<std::int32_t>(text.size())));
  icu::UnicodeString composed = nfc->normalize(source, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("NFC normalization failed: ") +
                             u_errorName(status));
  }
  std::string out;
  composed.toUTF8String(out);
  return out;
}

std::string normalize(std::string_view text, const NormalizeOptions& options) {
  if (options.nfc) {
    return strip_punctuation(lowercase(to_nfc(text)), options);
  }
  return strip_punctuation(lowercase(text), options);
}

Document normalize_document(const Document& doc, const NormalizeOptions& options) {
  if (doc.mode() == DocumentMode::WholeBuffer) {
    return Document::whole_buffer(doc.source_id(), normalize(doc.buffer(), options),
                                  doc.byte_len(), doc.replaced_sequences());
  }
  std::vector<std::string> records;
  records.reserve(doc.records().size());
  for (const auto& r : doc.records()) records.push_back(normalize(r, options));
  return Document::records(doc.source_id(), std::move(records), doc.byte_len(),
                           doc.replaced_sequences());
}

}  // namespace wordfreq
