#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wordfreq/normalize.hpp"
#include "wordfreq/tokenize_count.hpp"

namespace wordfreq {

/// Pipeline stages, in pipeline order.
enum class Stage { Read, Lowercase, StripPunct, TokenizeCount };

inline constexpr Stage kStages[] = {Stage::Read, Stage::Lowercase, Stage::StripPunct,
                                    Stage::TokenizeCount};

enum class CountMode { OnePass, Sharded };

struct StageTiming {
  Stage stage = Stage::Read;
  std::vector<double> runs;  // seconds
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(const StageTiming&, const StageTiming&) = default;
};

struct BenchReport {
  std::string corpus_id;
  CountMode mode = CountMode::OnePass;
  unsigned jobs = 1;
  unsigned reps = 3;
  std::vector<StageTiming> stages;
  std::uint64_t result_word_count = 0;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

struct BenchOptions {
  CountMode mode = CountMode::OnePass;
  unsigned reps = 3;
  unsigned jobs = 1;
  NormalizeOptions normalize;
};

struct BenchRun {
  BenchReport report;
  FrequencyTable table;  // output of the full pipeline
};

/// Times each stage separately: its input is built once, then one untimed
/// warm-up and `reps` timed executions follow. Throws std::invalid_argument
/// when reps or jobs is 0.
BenchRun run_bench(const std::filesystem::path& path, const BenchOptions& options = {});

/// Computes mean/min/max from runs.
StageTiming summarize(Stage stage, std::vector<double> runs);

std::string stage_name(Stage stage);
std::string mode_name(CountMode mode);

/// Aligned text table: one row per stage with the mean in seconds to three
/// decimals and the repetition count.
std::string format_report(const BenchReport& report);
std::string format_json(const BenchReport& report);
BenchReport parse_json(const std::string& text);

}  // namespace wordfreq
