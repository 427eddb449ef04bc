#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "wordfreq/bench.hpp"
#include "wordfreq/normalize.hpp"
#include "wordfreq/output.hpp"
#include "wordfreq/tokenize_count.hpp"
#include "wordfreq/vectorize.hpp"

namespace wordfreq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;

enum class Subcommand { Freq, Tone, Vectorize, Similarity, Bench };

/// Everything one invocation needs. Fields that a subcommand does not use
/// keep their defaults.
struct RunConfig {
  Subcommand subcommand = Subcommand::Freq;
  std::vector<std::string> input_paths;

  PunctPreset punct_preset = PunctPreset::Full;
  bool unicode_punct = false;
  bool nfc = false;

  SortKey sort_key = SortKey::Alpha;
  OutputFormat output_format = OutputFormat::Tsv;

  CountMode mode = CountMode::OnePass;
  unsigned reps = 3;
  unsigned jobs = 1;

  // tone
  std::string lexicon_path;
  std::string pos_name = "positive";
  std::string neg_name = "negative";

  // vectorize / similarity
  VectorKind weight = VectorKind::Count;

  // bench
  std::string json_path;

  NormalizeOptions normalize_options() const { return {punct_preset, unicode_punct, nfc}; }
};

/// Parses `args` (without the program name). Returns the config, or the exit
/// code to stop with when parsing ends the run (help, version, usage error);
/// messages for those cases are written to `out` / `err`.
std::variant<RunConfig, int> parse_args(const std::vector<std::string>& args,
                                        std::ostream& out, std::ostream& err);

/// Runs a parsed config. Results go to `out`, warnings and errors to `err`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by execute.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordfreq::cli
