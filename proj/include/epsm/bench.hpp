#pragma once

// Benchmark protocol: generate or load a corpus, extract random patterns of
// fixed lengths, time every algorithm per pattern (preprocessing included)
// and cross-check occurrence statistics between algorithms.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epsm/packed_word.hpp"
#include "epsm/text.hpp"

namespace epsm {

enum class CorpusKind { genome, protein, english, file };

const char* to_string(CorpusKind k);
// Throws UsageError for unknown names.
CorpusKind parse_corpus_kind(std::string_view name);

inline constexpr std::string_view kGenomeAlphabet = "ACGT";
inline constexpr std::string_view kProteinAlphabet = "ACDEFGHIKLMNPQRSTVWY";

struct CorpusSpec {
  CorpusKind kind = CorpusKind::genome;
  std::size_t size = 1 << 20;
  std::uint64_t seed = 1;
  // Source for kind == file, optional for english.
  std::optional<std::filesystem::path> path{};

  std::string label() const;
};

// Deterministic in (kind, size, seed). For file and english-with-path the
// file is read and truncated to `size` bytes. Throws UsageError for size 0
// and InputError for an unreadable file.
std::vector<std::uint8_t> generate_corpus(const CorpusSpec& spec);

// `count` substrings of length m with independent uniform starts in
// [0, n - m]; duplicates allowed. Throws UsageError for m == 0, m > n or
// count == 0.
std::vector<Pattern> extract_patterns(const Text& t, std::size_t m, std::size_t count, std::uint64_t seed);

// Order-independent positional checksum of an occurrence list.
std::uint64_t occurrence_checksum(const Occurrences& occ);

struct BenchConfig {
  std::vector<std::size_t> lengths = {2, 4, 6, 8, 12, 16, 20, 24, 28, 32};
  std::size_t patterns_per_length = 100;
  std::uint64_t seed = 42;
  // Any of: epsm, naive, shift_or, sbndm_q (uses q below) or sbndm_q<N>.
  std::vector<std::string> algorithms = {"epsm", "naive", "shift_or", "sbndm_q"};
  unsigned q = 2;
  std::size_t repetitions = 1;
  // Backend for the epsm rows; default_backend() when unset.
  std::optional<Backend> backend;
};

struct BenchRow {
  std::string corpus;
  std::string algorithm;
  std::size_t m = 0;
  std::size_t patterns = 0;
  bool supported = true;
  double mean_ms = 0;
  double median_ms = 0;
  std::uint64_t total_occ = 0;
  std::uint64_t checksum = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

// Raised when two algorithms disagree on total_occ or checksum.
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// Throws UsageError for an invalid config (unknown algorithm, empty lengths,
// zero patterns or repetitions, m > n). Algorithms whose preconditions
// exclude some m produce unsupported rows. Throws IntegrityError when
// supported rows of the same m disagree.
BenchReport run_benchmark(const Text& t, const BenchConfig& cfg, std::string_view corpus = "text");

// Names rows of `report` that disagree; empty when consistent.
std::vector<std::string> integrity_violations(const BenchReport& report);

enum class ReportFormat { csv, table };

inline constexpr std::string_view kCsvHeader = "corpus,algo,m,patterns,mean_ms,median_ms,total_occ,checksum";

std::string emit_report(const BenchReport& report, ReportFormat format);

// Inverse of emit_report(.., csv). Throws InputError on malformed input.
BenchReport parse_csv_report(std::string_view csv);

}  // namespace epsm
