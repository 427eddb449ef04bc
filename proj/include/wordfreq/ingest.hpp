#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wordfreq {

enum class DocumentMode { WholeBuffer, Records };

/// Text read from one source, held either as a single buffer or as an
/// ordered list of line records. Immutable once built.
class Document {
 public:
  static Document whole_buffer(std::string source_id, std::string buffer,
                               std::uint64_t byte_len,
                               std::uint64_t replaced_sequences = 0);

  /// Throws std::invalid_argument if any record contains a line feed.
  static Document records(std::string source_id,
                          std::vector<std::string> records,
                          std::uint64_t byte_len,
                          std::uint64_t replaced_sequences = 0);

  const std::string& source_id() const noexcept { return source_id_; }
  DocumentMode mode() const noexcept;

  /// Throws WrongMode unless mode() == WholeBuffer.
  const std::string& buffer() const;
  /// Throws WrongMode unless mode() == Records.
  const std::vector<std::string>& records() const;

  /// Size in bytes of the raw content that was read.
  std::uint64_t byte_len() const noexcept { return byte_len_; }
  /// Number of malformed UTF-8 sequences replaced by U+FFFD while decoding.
  std::uint64_t replaced_sequences() const noexcept { return replaced_; }

 private:
  Document(std::string source_id,
           std::variant<std::string, std::vector<std::string>> content,
           std::uint64_t byte_len, std::uint64_t replaced);

  std::string source_id_;
  std::variant<std::string, std::vector<std::string>> content_;
  std::uint64_t byte_len_ = 0;
  std::uint64_t replaced_ = 0;
};

struct DecodedText {
  std::string text;
  std::uint64_t replaced = 0;
};

// Each maximal ill-formed subsequence becomes one U+FFFD.
DecodedText decode_utf8_lossy(std::string_view bytes);

// Splits on LF, drops one trailing CR per line, and drops the empty tail
// produced by a terminating LF. Empty input yields no records.
std::vector<std::string> split_records(std::string_view text);

Document read_text(const std::filesystem::path& path);
Document read_records(const std::filesystem::path& path);

}  // namespace wordfreq
