#include "wordfreq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "wordfreq/ingest.hpp"

namespace wordfreq {

namespace {

using Clock = std::chrono::steady_clock;

// Keeps timed results observable so the work cannot be elided.
volatile std::uint64_t g_sink = 0;

std::uint64_t weight(const Document& doc) {
  if (doc.mode() == DocumentMode::WholeBuffer) return doc.buffer().size();
  std::uint64_t n = doc.records().size();
  for (const auto& r : doc.records()) n += r.size();
  return n;
}

template <typename Fn>
std::vector<double> time_reps(unsigned reps, Fn&& fn) {
  fn();  // warm-up
  std::vector<double> runs;
  runs.reserve(reps);
  for (unsigned i = 0; i < reps; ++i) {
    const auto start = Clock::now();
    fn();
    const auto stop = Clock::now();
    runs.push_back(std::chrono::duration<double>(stop - start).count());
  }
  return runs;
}

Document read(const std::filesystem::path& path, CountMode mode) {
  return mode == CountMode::OnePass ? read_text(path) : read_records(path);
}

template <typename Fn>
Document map_document(const Document& doc, Fn&& fn) {
  if (doc.mode() == DocumentMode::WholeBuffer) {
    return Document::whole_buffer(doc.source_id(), fn(doc.buffer()), doc.byte_len(),
                                  doc.replaced_sequences());
  }
  std::vector<std::string> out;
  out.reserve(doc.records().size());
  for (const auto& r : doc.records()) out.push_back(fn(r));
  return Document::records(doc.source_id(), std::move(out), doc.byte_len(),
                           doc.replaced_sequences());
}

FrequencyTable count(const Document& doc, unsigned jobs) {
  if (doc.mode() == DocumentMode::WholeBuffer) {
    return count_onepass(tokenize(doc.buffer()));
  }
  return count_sharded(doc, jobs);
}

Stage parse_stage(const std::string& s) {
  for (Stage st : kStages) {
    if (stage_name(st) == s) return st;
  }
  throw std::invalid_argument("unknown stage: " + s);
}

CountMode parse_mode(const std::string& s) {
  if (s == "onepass") return CountMode::OnePass;
  if (s == "sharded") return CountMode::Sharded;
  throw std::invalid_argument("unknown mode: " + s);
}

}  // namespace

StageTiming summarize(Stage stage, std::vector<double> runs) {
  StageTiming t;
  t.stage = stage;
  t.runs = std::move(runs);
  if (!t.runs.empty()) {
    t.mean = std::accumulate(t.runs.begin(), t.runs.end(), 0.0) /
             static_cast<double>(t.runs.size());
    const auto [lo, hi] = std::minmax_element(t.runs.begin(), t.runs.end());
    t.min = *lo;
    t.max = *hi;
  }
  return t;
}

BenchRun run_bench(const std::filesystem::path& path, const BenchOptions& options) {
  if (options.reps == 0) throw std::invalid_argument("reps must be >= 1");
  if (options.jobs == 0) throw std::invalid_argument("jobs must be >= 1");
  const auto& norm = options.normalize;

  BenchRun run;
  BenchReport& report = run.report;
  report.corpus_id = path.string();
  report.mode = options.mode;
  report.jobs = options.jobs;
  report.reps = options.reps;

  // Read. Surfaces ingest errors before any timing starts.
  Document raw = read(path, options.mode);
  report.stages.push_back(summarize(Stage::Read, time_reps(options.reps, [&] {
    g_sink = g_sink + read(path, options.mode).byte_len();
  })));

  // Lowercase (with the optional NFC pass, which belongs to case handling).
  auto lower_fn = [&](const std::string& s) {
    return norm.nfc ? lowercase(to_nfc(s)) : lowercase(s);
  };
  report.stages.push_back(summarize(Stage::Lowercase, time_reps(options.reps, [&] {
    g_sink = g_sink + weight(map_document(raw, lower_fn));
  })));
  const Document lowered = map_document(raw, lower_fn);

  auto strip_fn = [&](const std::string& s) { return strip_punctuation(s, norm); };
  report.stages.push_back(summarize(Stage::StripPunct, time_reps(options.reps, [&] {
    g_sink = g_sink + weight(map_document(lowered, strip_fn));
  })));
  const Document stripped = map_document(lowered, strip_fn);

  report.stages.push_back(summarize(Stage::TokenizeCount, time_reps(options.reps, [&] {
    g_sink = g_sink + count(stripped, options.jobs).distinct();
  })));
  run.table = count(stripped, options.jobs);
  report.result_word_count = run.table.distinct();
  return run;
}

std::string stage_name(Stage stage) {
  switch (stage) {
    case Stage::Read:
      return "read";
    case Stage::Lowercase:
      return "lowercase";
    case Stage::StripPunct:
      return "strip_punct";
    case Stage::TokenizeCount:
      return "tokenize_count";
  }
  return "unknown";
}

std::string mode_name(CountMode mode) {
  return mode == CountMode::OnePass ? "onepass" : "sharded";
}

std::string format_report(const BenchReport& report) {
  std::ostringstream out;
  out << "corpus: " << report.corpus_id << "\n"
      << "mode: " << mode_name(report.mode) << "  jobs: " << report.jobs
      << "  distinct words: " << report.result_word_count << "\n";
  char line[128];
  std::snprintf(line, sizeof line, "%-16s %12s %6s\n", "stage", "mean (s)", "reps");
  out << line;
  for (const auto& st : report.stages) {
    std::snprintf(line, sizeof line, "%-16s %12.3f %6zu\n", stage_name(st.stage).c_str(),
                  st.mean, st.runs.size());
    out << line;
  }
  return out.str();
}

std::string format_json(const BenchReport& report) {
  nlohmann::json j;
  j["corpus_id"] = report.corpus_id;
  j["mode"] = mode_name(report.mode);
  j["jobs"] = report.jobs;
  j["reps"] = report.reps;
  j["result_word_count"] = report.result_word_count;
  j["stages"] = nlohmann::json::array();
  for (const auto& st : report.stages) {
    j["stages"].push_back({{"stage", stage_name(st.stage)},
                           {"runs", st.runs},
                           {"mean", st.mean},
                           {"min", st.min},
                           {"max", st.max}});
  }
  return j.dump(2);
}

BenchReport parse_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  BenchReport r;
  r.corpus_id = j.at("corpus_id").get<std::string>();
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.jobs = j.at("jobs").get<unsigned>();
  r.reps = j.at("reps").get<unsigned>();
  r.result_word_count = j.at("result_word_count").get<std::uint64_t>();
  for (const auto& s : j.at("stages")) {
    StageTiming t;
    t.stage = parse_stage(s.at("stage").get<std::string>());
    t.runs = s.at("runs").get<std::vector<double>>();
    t.mean = s.at("mean").get<double>();
    t.min = s.at("min").get<double>();
    t.max = s.at("max").get<double>();
    r.stages.push_back(std::move(t));
  }
  return r;
}

}  // namespace wordfreq
