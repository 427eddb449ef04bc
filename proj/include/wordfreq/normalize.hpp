#pragma once

#include <string>
#include <string_view>

#include "wordfreq/ingest.hpp"

namespace wordfreq {

/// Which ASCII punctuation characters strip_punctuation replaces.
enum class PunctPreset {
  Full,    ///< all 32 ASCII punctuation characters
  Stata,   ///< the reference Stata script's set: Full minus '"' and '|'
  Python,  ///< the reference Python script's set: Full minus '$' and '|'
};

struct NormalizeOptions {
  PunctPreset preset = PunctPreset::Full;
  /// Also replace every code point in a Unicode P* general category.
  bool unicode_punct = false;
  /// Apply NFC composition before case mapping.
  bool nfc = false;
};

/// The ASCII characters removed under a preset, in ascending order.
std::string_view punctuation_chars(PunctPreset preset) noexcept;

/// Unicode simple lowercase mapping, per code point. Ill-formed UTF-8 bytes
/// are copied through unchanged.
std::string lowercase(std::string_view text);

/// Replaces each punctuation character, TAB, LF and CR with one ASCII space.
/// The output has exactly as many code points as the input.
std::string strip_punctuation(std::string_view text,
                              const NormalizeOptions& options = {});

std::string to_nfc(std::string_view text);

/// Full normalization: optional NFC, then lowercase, then strip_punctuation.
std::string normalize(std::string_view text, const NormalizeOptions& options = {});

/// Applies normalize() to the buffer or to each record, keeping metadata.
Document normalize_document(const Document& doc, const NormalizeOptions& options = {});

}  // namespace wordfreq
