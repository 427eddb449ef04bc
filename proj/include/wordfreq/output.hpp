#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wordfreq/tokenize_count.hpp"

namespace wordfreq {

enum class OutputFormat { Tsv, Csv, Jsonl };

/// Shortest decimal form that round-trips to the same double.
std::string format_number(double value);

/// "NA" when empty.
std::string format_optional(const std::optional<double>& value);

/// RFC 4180 quoting, only when the field needs it.
std::string csv_field(std::string_view field);

/// Writes one frequency block.
///   tsv/csv: header `word<sep>count`, then one row per entry. With a
///            source_id, the block starts with a `source_id<sep><id>` line.
///   jsonl:   one object per row with fields source_id (when given), word
///            and count.
void write_frequency(std::ostream& out, const std::vector<WordCount>& rows,
                     OutputFormat format, const std::optional<std::string>& source_id);

}  // namespace wordfreq
