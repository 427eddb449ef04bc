// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "test_util.hpp"
#include "wordfreq/bench.hpp"
#include "wordfreq/cli.hpp"
#include "wordfreq/ingest.hpp"
#include "wordfreq/lexicon.hpp"
#include "wordfreq/normalize.hpp"
#include "wordfreq/output.hpp"
#include "wordfreq/tokenize_count.hpp"
#include "wordfreq/vectorize.hpp"

namespace wf = wordfreq;
namespace wt = wordfreq::testing;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 = no limit
  std::function<std::string()> body;  // returns a short detail string
};

wf::FrequencyTable pipeline_count(std::string_view text) {
  return wf::count_onepass(wf::tokenize(wf::normalize(text)));
}

std::vector<std::pair<std::string, std::uint64_t>> sorted(const wf::FrequencyTable& t) {
  auto v = wf::sorted_view(t, wf::SortKey::Alpha);
  return {v.begin(), v.end()};
}

nlohmann::json manifest() {
  return nlohmann::json::parse(wt::read_file(wt::data_dir() / "hamlet.manifest.json"));
}

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int rc = wf::cli::run(args, out, err);
  if (code) *code = rc;
  return out.str();
}

// 1. One-pass on the whole buffer and sharded on records agree key by key.
std::string cross_algorithm() {
  const auto path = wt::hamlet_path();
  const wf::Document whole = wf::normalize_document(wf::read_text(path));
  const wf::Document recs = wf::normalize_document(wf::read_records(path));
  const wf::FrequencyTable onepass = wf::count_onepass(wf::tokenize(whole.buffer()));
  for (unsigned jobs : {1u, 4u}) {
    const wf::FrequencyTable sharded = wf::count_sharded(recs, jobs);
    check(sharded.distinct() == onepass.distinct(), "distinct word counts differ");
    for (const auto& [word, n] : onepass.entries()) {
      check(sharded.count(word) == n, "count differs for '" + word + "'");
    }
    check(sharded == onepass, "tables differ (jobs=" + std::to_string(jobs) + ")");
  }
  return std::to_string(onepass.distinct()) + " words, " +
         std::to_string(onepass.total_tokens()) + " tokens, jobs {1,4}";
}

// 2. Record count equals the fixture oracle's line count.
std::string record_count() {
  const auto m = manifest();
  const auto expected = m.at("lines").get<std::size_t>();
  const wf::Document recs = wf::read_records(wt::hamlet_path());
  check(recs.byte_len() == m.at("bytes").get<std::uint64_t>(),
        "pinned corpus file does not match its manifest");
  check(recs.records().size() == expected,
        "records " + std::to_string(recs.records().size()) + " != oracle " +
            std::to_string(expected));
  return std::to_string(expected) + " records (reference edition: 5382)";
}

// 3. Full pipeline vs naive quadratic counting oracle.
std::string oracle_equivalence() {
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 1000; ++i) {
    const std::string s = wt::random_text(rng, 200);
    const auto expected = wt::oracle_count(wt::oracle_tokenize(wt::oracle_normalize_ascii(s)));
    check(sorted(pipeline_count(s)) == expected, "mismatch on input #" + std::to_string(i));
  }
  return "1000 random strings";
}

// 4. Monoid laws and sharding invariance.
std::string monoid_suite() {
  std::mt19937_64 rng(20240502);
  auto table = [&] { return wf::count_onepass(wf::TokenStream{wt::random_words(rng, 20)}); };
  for (int i = 0; i < 500; ++i) {
    const auto t1 = table(), t2 = table(), t3 = table();
    check(wf::merge_tables(wf::merge_tables(t1, t2), t3) ==
              wf::merge_tables(t1, wf::merge_tables(t2, t3)),
          "associativity");
    check(wf::merge_tables(t1, t2) == wf::merge_tables(t2, t1), "commutativity");
    check(wf::merge_tables(t1, {}) == t1 && wf::merge_tables({}, t1) == t1, "identity");
  }
  const auto stream = wt::random_words(rng, 400, 8, 3);
  const auto expected = wf::count_onepass(wf::TokenStream{stream});
  for (int i = 0; i < 100; ++i) {
    std::vector<std::string> records(1);
    for (const auto& w : stream) {
      if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) records.emplace_back();
      if (!records.back().empty()) records.back() += ' ';
      records.back() += w;
    }
    const auto doc = wf::Document::records("p", records, 0);
    const unsigned jobs = 1 + static_cast<unsigned>(i % 8);
    check(wf::count_sharded(doc, jobs) == expected,
          "re-partition #" + std::to_string(i) + " differs");
  }
  return "500 triples, 100 re-partitions";
}

// 5. Normalization properties.
std::string normalization_properties() {
  std::mt19937_64 rng(20240503);
  for (int i = 0; i < 1000; ++i) {
    const std::string s = wt::random_text(rng, 200, true);
    const std::string stripped = wf::strip_punctuation(s);
    const std::string lowered = wf::lowercase(s);
    check(wf::strip_punctuation(stripped) == stripped, "strip idempotence");
    check(wf::lowercase(lowered) == lowered, "lowercase idempotence");
    check(wt::code_points(stripped) == wt::code_points(s), "character count");
    check(wf::lowercase(stripped) == wf::strip_punctuation(lowered), "commutation");
  }
  return "1000 random strings x 4 properties";
}

// 6. Tone on synthetic documents.
std::string tone_correctness() {
  const wf::Lexicon lex =
      wf::parse_lexicon("word,category\ngain,positive\ngood,positive\nloss,negative\n", "t");
  const auto score = [&](std::string_view text) {
    return wf::tone(pipeline_count(text), lex, "positive", "negative");
  };
  const auto s31 = score("Good gain, good. A loss!");
  check(s31.positive == 3 && s31.negative == 1, "pos/neg counts");
  check(s31.tone && *s31.tone == 0.5, "tone(3,1) != 0.5");
  const auto s22 = score("gain loss good loss");
  check(s22.tone && *s22.tone == 0.0, "tone(2,2) != 0.0");
  const auto s00 = score("the rest is silence");
  check(!s00.tone, "tone(0,0) should be undefined");
  check(wf::format_optional(s00.tone) == "NA", "undefined tone not printed as NA");

  wt::TempFile lex_file("word,category\ngain,positive\ngood,positive\nloss,negative\n", ".csv");
  wt::TempFile doc("the rest is silence");
  const std::string out =
      run_cli({"tone", "--lexicon", lex_file.path().string(), doc.path().string()});
  check(out.find("\t0\t0\tNA\n") != std::string::npos, "CLI does not print NA");
  return "0.5 / 0.0 / NA";
}

// 7. Vector and similarity checks.
std::string vector_checks() {
  const auto v2 = std::make_shared<const wf::Vocabulary>(std::vector<std::string>{"p", "q"});
  const wf::DocumentVector a{v2, {1, 1}, wf::VectorKind::Count};
  const wf::DocumentVector b{v2, {1, 0}, wf::VectorKind::Count};
  const wf::DocumentVector c{v2, {0, 1}, wf::VectorKind::Count};
  check(std::abs(*wf::cosine(a, a) - 1.0) <= 1e-12, "self-similarity");
  check(*wf::cosine(b, c) == 0.0, "orthogonal");
  check(std::abs(*wf::cosine(a, b) - 0.7071067811865475) <= 1e-12, "[1,1].[1,0]");

  // TF-IDF cosine vs direct formula over word maps.
  std::mt19937_64 rng(20240507);
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<wf::FrequencyTable> tables;
    std::vector<std::map<std::string, double>> docs;
    for (std::size_t d = 0; d < n; ++d) {
      const auto words = wt::random_words(rng, 12, 10, 1);
      tables.push_back(wf::count_onepass(wf::TokenStream{words}));
      std::map<std::string, double> m;
      for (const auto& w : words) m[w] += 1;
      docs.push_back(m);
    }
    const auto vocab = wf::build_vocabulary(tables);
    std::vector<wf::DocumentVector> counts;
    for (const auto& t : tables) counts.push_back(wf::count_vector(t, vocab));
    const auto weighted = wf::tfidf_weight(counts);

    auto w = [&](std::size_t d, const std::string& word) {
      double total = 0;
      for (const auto& [_, x] : docs[d]) total += x;
      if (!docs[d].count(word)) return 0.0;
      double df = 0;
      for (const auto& o : docs) df += o.count(word) ? 1 : 0;
      return docs[d].at(word) / total * (std::log((1.0 + n) / (1.0 + df)) + 1.0);
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double dot = 0, ni = 0, nj = 0;
        for (const auto& [word, _] : docs[i]) {
          ni += w(i, word) * w(i, word);
          dot += w(i, word) * w(j, word);
        }
        for (const auto& [word, _] : docs[j]) nj += w(j, word) * w(j, word);
        const auto got = wf::cosine(weighted[i], weighted[j]);
        const bool defined = ni > 0 && nj > 0;
        check(got.has_value() == defined, "undefined-ness differs");
        if (defined) worst = std::max(worst, std::abs(*got - dot / std::sqrt(ni * nj)));
      }
    }
  }
  check(worst <= 1e-9, "tf-idf cosine off by " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof buf, "max tf-idf deviation %.2e", worst);
  return buf;
}

// 8. Benchmark protocol.
std::string bench_protocol() {
  const auto path = wt::hamlet_path();
  const wf::BenchRun onepass = wf::run_bench(path);
  wf::BenchOptions sharded_opts;
  sharded_opts.mode = wf::CountMode::Sharded;
  const wf::BenchRun sharded = wf::run_bench(path, sharded_opts);
  for (const auto* run : {&onepass, &sharded}) {
    check(run->report.stages.size() == 4, "stage count");
    for (std::size_t i = 0; i < 4; ++i) {
      check(run->report.stages[i].stage == wf::kStages[i], "stage order");
      check(run->report.stages[i].runs.size() == 3, "runs per stage != 3");
    }
  }
  check(onepass.report.result_word_count == sharded.report.result_word_count,
        "result_word_count differs between modes");
  return "4 stages x 3 runs, " + std::to_string(onepass.report.result_word_count) +
         " words in both modes";
}

// 9. CLI determinism.
std::string cli_determinism() {
  const std::string path = wt::hamlet_path().string();
  int rc1 = -1, rc2 = -1, rc3 = -1, rc4 = -1;
  const std::string a = run_cli({"freq", path}, &rc1);
  const std::string b = run_cli({"freq", path}, &rc2);
  const std::string j1 = run_cli({"freq", "--mode", "sharded", "--jobs", "1", path}, &rc3);
  const std::string j8 = run_cli({"freq", "--mode", "sharded", "--jobs", "8", path}, &rc4);
  check(rc1 == 0 && rc2 == 0 && rc3 == 0 && rc4 == 0, "non-zero exit");
  check(!a.empty() && a == b, "repeated invocations differ");
  check(j1 == j8, "--jobs 1 and --jobs 8 differ");
  const std::string oj1 = run_cli({"freq", "--jobs", "1", path});
  const std::string oj8 = run_cli({"freq", "--jobs", "8", path});
  check(oj1 == oj8 && oj1 == a, "one-pass output depends on --jobs");
  return std::to_string(a.size()) + " bytes, identical";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cross-algorithm equivalence (sharded == one-pass on corpus)", 1.0, cross_algorithm},
      {2, "record count equals fixture line-count oracle", 0.0, record_count},
      {3, "pipeline vs naive counting oracle", 5.0, oracle_equivalence},
      {4, "merge monoid laws and sharding invariance", 5.0, monoid_suite},
      {5, "normalization properties", 5.0, normalization_properties},
      {6, "tone correctness", 0.0, tone_correctness},
      {7, "vector and cosine checks", 0.0, vector_checks},
      {8, "benchmark protocol (3 runs, 4 stages, mode agreement)", 0.0, bench_protocol},
      {9, "CLI determinism", 0.0, cli_determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
      ok = false;
      detail += " (exceeded time limit)";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", elapsed);
    std::printf("[%s] criterion %d: %s -- %s [%s]\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), detail.c_str(), timing);
    failed += ok ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
