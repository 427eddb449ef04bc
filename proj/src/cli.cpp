#include "wordfreq/cli.hpp"

#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"

#include "wordfreq/errors.hpp"
#include "wordfreq/ingest.hpp"
#include "wordfreq/lexicon.hpp"

namespace wordfreq::cli {

namespace {

const std::map<std::string, PunctPreset> kPunctNames = {
    {"full", PunctPreset::Full},
    {"paper-stata", PunctPreset::Stata},
    {"paper-python", PunctPreset::Python},
};
const std::map<std::string, bool> kOnOff = {{"on", true}, {"off", false}};
const std::map<std::string, CountMode> kModeNames = {{"onepass", CountMode::OnePass},
                                                     {"sharded", CountMode::Sharded}};
const std::map<std::string, SortKey> kSortNames = {{"alpha", SortKey::Alpha},
                                                   {"count", SortKey::CountDesc}};
const std::map<std::string, OutputFormat> kFormatNames = {
    {"tsv", OutputFormat::Tsv}, {"csv", OutputFormat::Csv}, {"jsonl", OutputFormat::Jsonl}};
const std::map<std::string, VectorKind> kWeightNames = {
    {"count", VectorKind::Count}, {"binary", VectorKind::Binary}, {"tfidf", VectorKind::TfIdf}};

void add_pipeline_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("inputs", cfg.input_paths, "Input text files")->required();
  cmd->add_option("--punct-set", cfg.punct_preset,
                  "ASCII punctuation set: full (all 32), paper-stata (no \" or |) "
                  "or paper-python (no $ or |)")
      ->transform(CLI::CheckedTransformer(kPunctNames, CLI::ignore_case))
      ->default_str("full");
  cmd->add_option("--unicode-punct", cfg.unicode_punct,
                  "Also strip Unicode punctuation (general category P*): on|off")
      ->transform(CLI::CheckedTransformer(kOnOff, CLI::ignore_case))
      ->default_str("off");
  cmd->add_flag("--nfc", cfg.nfc, "Apply NFC normalization before case mapping");
  cmd->add_option("--mode", cfg.mode,
                  "onepass: count the whole file in one pass; sharded: count each "
                  "line separately and merge")
      ->transform(CLI::CheckedTransformer(kModeNames, CLI::ignore_case))
      ->default_str("onepass");
  cmd->add_option("--jobs", cfg.jobs, "Worker threads for sharded counting")
      ->check(CLI::Range(1u, 1024u))
      ->default_str("1");
}

void add_weight_flag(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--weight", cfg.weight, "count, binary or tfidf")
      ->transform(CLI::CheckedTransformer(kWeightNames, CLI::ignore_case))
      ->default_str("count");
}

FrequencyTable count_file(const std::string& path, const RunConfig& cfg, std::ostream& err) {
  const Document doc = cfg.mode == CountMode::OnePass ? read_text(path) : read_records(path);
  if (doc.replaced_sequences() > 0) {
    err << "warning: " << path << ": replaced " << doc.replaced_sequences()
        << " invalid UTF-8 sequence(s)\n";
  }
  const Document norm = normalize_document(doc, cfg.normalize_options());
  if (norm.mode() == DocumentMode::WholeBuffer) return count_text(norm.buffer());
  return count_sharded(norm, cfg.jobs);
}

std::vector<FrequencyTable> count_files(const RunConfig& cfg, std::ostream& err) {
  std::vector<FrequencyTable> tables;
  tables.reserve(cfg.input_paths.size());
  for (const auto& path : cfg.input_paths) tables.push_back(count_file(path, cfg, err));
  return tables;
}

std::vector<DocumentVector> build_vectors(const std::vector<FrequencyTable>& tables,
                                          VectorKind kind) {
  const VocabularyPtr vocab = build_vocabulary(tables);
  std::vector<DocumentVector> vectors;
  vectors.reserve(tables.size());
  for (const auto& t : tables) {
    vectors.push_back(kind == VectorKind::Binary ? binary_vector(t, vocab)
                                                 : count_vector(t, vocab));
  }
  if (kind == VectorKind::TfIdf) return tfidf_weight(vectors);
  return vectors;
}

void run_freq(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool tagged =
      cfg.input_paths.size() > 1 || cfg.output_format == OutputFormat::Jsonl;
  for (const auto& path : cfg.input_paths) {
    const FrequencyTable table = count_file(path, cfg, err);
    write_frequency(out, sorted_view(table, cfg.sort_key), cfg.output_format,
                    tagged ? std::optional<std::string>(path) : std::nullopt);
  }
}

void run_tone(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Lexicon lex = load_lexicon(cfg.lexicon_path, cfg.normalize_options());
  for (const auto& name : {cfg.pos_name, cfg.neg_name}) {
    if (lex.categories.find(name) == lex.categories.end()) throw UnknownCategory(name);
  }
  out << "source_id\tpos\tneg\ttone\n";
  for (const auto& path : cfg.input_paths) {
    const ToneScore s = tone(count_file(path, cfg, err), lex, cfg.pos_name, cfg.neg_name);
    out << path << '\t' << s.positive << '\t' << s.negative << '\t'
        << format_optional(s.tone) << '\n';
  }
}

void run_vectorize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto vectors = build_vectors(count_files(cfg, err), cfg.weight);
  out << "source_id";
  if (!vectors.empty()) {
    for (const auto& w : vectors.front().vocab->words()) out << '\t' << w;
  }
  out << '\n';
  for (std::size_t d = 0; d < vectors.size(); ++d) {
    out << cfg.input_paths[d];
    for (double x : vectors[d].values) out << '\t' << format_number(x);
    out << '\n';
  }
}

void run_similarity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto m = similarity_matrix(build_vectors(count_files(cfg, err), cfg.weight));
  out << "source_id";
  for (const auto& id : cfg.input_paths) out << '\t' << id;
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << cfg.input_paths[i];
    for (const auto& c : m[i]) out << '\t' << format_optional(c);
    out << '\n';
  }
}

void run_bench_cmd(const RunConfig& cfg, std::ostream& out) {
  BenchOptions opts;
  opts.mode = cfg.mode;
  opts.reps = cfg.reps;
  opts.jobs = cfg.jobs;
  opts.normalize = cfg.normalize_options();
  auto reports = nlohmann::json::array();
  for (std::size_t i = 0; i < cfg.input_paths.size(); ++i) {
    const BenchRun r = run_bench(cfg.input_paths[i], opts);
    if (i > 0) out << '\n';
    out << format_report(r.report);
    reports.push_back(nlohmann::json::parse(format_json(r.report)));
  }
  if (cfg.json_path.empty()) return;
  std::ofstream js(cfg.json_path, std::ios::binary);
  // One input: a single report object. Several: an array of them.
  js << (reports.size() == 1 ? reports.front() : reports).dump(2) << '\n';
  if (!js) throw Error("cannot write " + cfg.json_path);
}

}  // namespace

std::variant<RunConfig, int> parse_args(const std::vector<std::string>& args,
                                        std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Word frequency, lexicon tone, document vectors and stage benchmarks",
               "wordfreq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "wordfreq 1.0.0");

  auto* freq = app.add_subcommand("freq", "Word frequency table per input file");
  add_pipeline_flags(freq, cfg);
  freq->add_option("--sort", cfg.sort_key, "Row order: alpha or count")
      ->transform(CLI::CheckedTransformer(kSortNames, CLI::ignore_case))
      ->default_str("alpha");
  freq->add_option("--format", cfg.output_format, "tsv, csv or jsonl")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
      ->default_str("tsv");

  auto* tone_cmd = app.add_subcommand("tone", "Lexicon tone score per input file");
  add_pipeline_flags(tone_cmd, cfg);
  tone_cmd->add_option("--lexicon", cfg.lexicon_path, "CSV with header word,category")
      ->required();
  tone_cmd->add_option("--pos", cfg.pos_name, "Positive category name")
      ->capture_default_str();
  tone_cmd->add_option("--neg", cfg.neg_name, "Negative category name")
      ->capture_default_str();

  auto* vectorize = app.add_subcommand("vectorize", "Document-by-word matrix as TSV");
  add_pipeline_flags(vectorize, cfg);
  add_weight_flag(vectorize, cfg);

  auto* similarity = app.add_subcommand("similarity", "Pairwise cosine similarity as TSV");
  add_pipeline_flags(similarity, cfg);
  add_weight_flag(similarity, cfg);

  auto* bench = app.add_subcommand("bench", "Per-stage timing, averaged over repeated runs");
  add_pipeline_flags(bench, cfg);
  bench->add_option("--reps", cfg.reps, "Timed runs per stage")
      ->check(CLI::Range(1u, 1000000u))
      ->capture_default_str();
  bench->add_option("--json", cfg.json_path, "Also write the report(s) as JSON to this file");

  // CLI11 consumes a vector of arguments back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (tone_cmd->parsed()) {
    cfg.subcommand = Subcommand::Tone;
  } else if (vectorize->parsed()) {
    cfg.subcommand = Subcommand::Vectorize;
  } else if (similarity->parsed()) {
    cfg.subcommand = Subcommand::Similarity;
  } else if (bench->parsed()) {
    cfg.subcommand = Subcommand::Bench;
  } else {
    cfg.subcommand = Subcommand::Freq;
  }
  return cfg;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.subcommand) {
      case Subcommand::Freq:
        run_freq(cfg, out, err);
        break;
      case Subcommand::Tone:
        run_tone(cfg, out, err);
        break;
      case Subcommand::Vectorize:
        run_vectorize(cfg, out, err);
        break;
      case Subcommand::Similarity:
        run_similarity(cfg, out, err);
        break;
      case Subcommand::Bench:
        run_bench_cmd(cfg, out);
        break;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(args, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return execute(std::get<RunConfig>(parsed), out, err);
}

}  // namespace wordfreq::cli
