// epsm: corpus generation, single-pattern search, benchmarks and self-test.
//
// Exit codes: 0 success, 1 pattern not found (search) or self-test mismatch,
// 2 usage error, 3 runtime error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

#include "epsm/baselines.hpp"
#include "epsm/bench.hpp"
#include "epsm/epsm.hpp"
#include "epsm/selftest.hpp"

namespace {

constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::vector<std::uint8_t> read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw epsm::InputError("cannot read '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw epsm::InputError("error reading '" + path + "'");
  return bytes;
}

void write_all(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw epsm::InputError("cannot write '" + path + "'");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw epsm::InputError("error writing '" + path + "'");
}

struct GenOptions {
  std::string kind = "genome";
  std::size_t size = 1 << 20;
  std::uint64_t seed = 1;
  std::string out;
  std::string path;
};

int cmd_gen(const GenOptions& o) {
  epsm::CorpusSpec spec{epsm::parse_corpus_kind(o.kind), o.size, o.seed, std::nullopt};
  if (!o.path.empty()) spec.path = o.path;
  const auto bytes = epsm::generate_corpus(spec);
  write_all(o.out, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  return 0;
}

struct SearchOptions {
  std::string text;
  std::string pattern;
  std::string algo = "epsm";
  std::string mode = "count";
  unsigned q = 2;
};

int cmd_search(const SearchOptions& o) {
  const auto pattern_bytes = epsm::unescape_bytes(o.pattern);
  if (pattern_bytes.empty()) throw epsm::UsageError("pattern must not be empty");
  const epsm::Pattern p(pattern_bytes);
  const epsm::Text t(read_all(o.text));

  epsm::Occurrences occ;
  if (o.algo == "epsm") {
    occ = epsm::search(p, t);
  } else if (o.algo == "epsm_a") {
    occ = epsm::epsm_a(p, t);
  } else if (o.algo == "epsm_b") {
    occ = epsm::epsm_b(p, t);
  } else if (o.algo == "epsm_c") {
    occ = epsm::epsm_c(p, t);
  } else if (o.algo == "naive") {
    occ = epsm::naive_search(p, t);
  } else if (o.algo == "shift_or") {
    occ = epsm::shift_or_search(p, t);
  } else {
    occ = epsm::sbndm_q_search(p, t, o.q);
  }

  if (o.mode == "count") {
    std::cout << occ.size() << '\n';
  } else {
    std::string out;
    for (std::size_t s : occ) out += std::to_string(s) + '\n';
    std::cout << out;
  }
  return occ.empty() ? kExitNotFound : 0;
}

struct BenchOptions {
  std::string text;
  std::string gen = "genome";
  std::size_t size = 1 << 20;
  std::uint64_t seed = 42;
  std::vector<std::size_t> lengths = {2, 4, 6, 8, 12, 16, 20, 24, 28, 32};
  std::size_t patterns = 100;
  std::vector<std::string> algos = {"epsm", "naive", "shift_or", "sbndm_q"};
  unsigned q = 2;
  std::size_t reps = 1;
  std::string csv;
};

int cmd_bench(const BenchOptions& o) {
  epsm::CorpusSpec spec;
  if (!o.text.empty()) {
    spec.kind = epsm::CorpusKind::file;
    spec.path = o.text;
    spec.size = SIZE_MAX;
  } else {
    spec.kind = epsm::parse_corpus_kind(o.gen);
    if (spec.kind == epsm::CorpusKind::file) throw epsm::UsageError("use --text to benchmark a file");
    spec.size = o.size;
    spec.seed = o.seed;
  }
  const epsm::Text t(o.text.empty() ? epsm::generate_corpus(spec) : read_all(o.text));

  epsm::BenchConfig cfg;
  cfg.lengths = o.lengths;
  cfg.patterns_per_length = o.patterns;
  cfg.seed = o.seed;
  cfg.algorithms = o.algos;
  cfg.q = o.q;
  cfg.repetitions = o.reps;

  const auto report = epsm::run_benchmark(t, cfg, spec.label());
  std::cout << epsm::emit_report(report, epsm::ReportFormat::table);
  if (o.csv == "-") {
    std::cout << epsm::emit_report(report, epsm::ReportFormat::csv);
  } else if (!o.csv.empty()) {
    write_all(o.csv, epsm::emit_report(report, epsm::ReportFormat::csv));
  }
  return 0;
}

int cmd_selftest(const epsm::SelftestOptions& o) {
  const auto result = epsm::run_selftest(o);
  std::cout << "backend checks: " << result.backend_checks << (epsm::simd_available() ? "" : " (SIMD unavailable)")
            << "\noracle checks:  " << result.oracle_checks << '\n';
  if (!result.passed()) {
    std::cout << "FAIL\n" << result.failure->describe();
    return 1;
  }
  std::cout << "PASS\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packed exact string matching: corpus generation, search, benchmarks"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic or file-derived corpus");
  gen_cmd->add_option("--kind", gen.kind, "genome | protein | english | file")->capture_default_str();
  gen_cmd->add_option("--size", gen.size, "Corpus size in bytes")->capture_default_str()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--path", gen.path, "Source file for kind=file (optional for english)");
  gen_cmd->add_option("--out", gen.out, "Output file")->required();

  SearchOptions srch;
  auto* search_cmd = app.add_subcommand("search", "Find all occurrences of one pattern in a file");
  search_cmd->add_option("--text", srch.text, "Text file")->required();
  search_cmd->add_option("--pattern", srch.pattern, "Pattern; \\xNN and \\\\ escapes accepted")->required();
  search_cmd->add_option("--algo", srch.algo, "Searcher")
      ->capture_default_str()
      ->check(CLI::IsMember({"epsm", "epsm_a", "epsm_b", "epsm_c", "naive", "shift_or", "sbndm_q"}));
  search_cmd->add_option("--mode", srch.mode, "Output mode")
      ->capture_default_str()
      ->check(CLI::IsMember({"count", "positions"}));
  search_cmd->add_option("--q", srch.q, "q-gram size for sbndm_q")->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time searchers on random patterns extracted from a corpus");
  auto* text_opt = bench_cmd->add_option("--text", bench.text, "Benchmark this file");
  bench_cmd->add_option("--gen", bench.gen, "Generate a corpus of this kind (genome | protein | english)")
      ->capture_default_str()
      ->excludes(text_opt);
  bench_cmd->add_option("--size", bench.size, "Generated corpus size")->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Corpus and pattern seed")->capture_default_str();
  bench_cmd->add_option("--lengths", bench.lengths, "Pattern lengths")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--patterns", bench.patterns, "Patterns per length")->capture_default_str();
  bench_cmd->add_option("--algos", bench.algos, "epsm, naive, shift_or, sbndm_q[N]")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--q", bench.q, "Default q for sbndm_q")->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per pattern (median taken)")->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv, "Write the csv report here ('-' for stdout)");

  epsm::SelftestOptions st;
  auto* selftest_cmd = app.add_subcommand("selftest", "Backend and oracle equivalence sweeps");
  selftest_cmd->add_option("--trials", st.trials, "Trials per sweep")->capture_default_str()->check(CLI::PositiveNumber);
  selftest_cmd->add_option("--seed", st.seed, "Trial seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*search_cmd) return cmd_search(srch);
    if (*bench_cmd) return cmd_bench(bench);
    return cmd_selftest(st);
  } catch (const epsm::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}
