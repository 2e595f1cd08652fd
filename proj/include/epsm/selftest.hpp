#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epsm/text.hpp"

namespace epsm {

struct NamedSearcher {
  std::string name;
  std::size_t min_m = 1;
  std::size_t max_m = SIZE_MAX;
  std::function<Occurrences(const Pattern&, const Text&)> run;
};

// Every EPSM kernel under every available backend plus the baselines.
std::vector<NamedSearcher> default_searchers();

struct SelftestOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 7;
};

struct Counterexample {
  std::string algorithm;
  std::string pattern;  // \xNN escaped
  std::string text;     // \xNN escaped, truncated when long
  std::size_t text_size = 0;
  Occurrences expected;
  Occurrences got;

  std::string describe() const;
};

struct SelftestResult {
  std::size_t backend_checks = 0;
  std::size_t oracle_checks = 0;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure.has_value(); }
};

// Backend-equivalence sweep over the packed instructions followed by an
// oracle-equivalence sweep of `searchers` against naive_search. Stops at the
// first mismatch. The trial sequence depends only on the seed.
SelftestResult run_selftest(const SelftestOptions& options, const std::vector<NamedSearcher>& searchers);

inline SelftestResult run_selftest(const SelftestOptions& options) {
  return run_selftest(options, default_searchers());
}

std::string escape_bytes(std::span<const std::uint8_t> bytes, std::size_t limit = SIZE_MAX);

// Accepts literal bytes with \xNN and \\ escapes. Throws UsageError on a
// malformed escape.
std::vector<std::uint8_t> unescape_bytes(std::string_view s);

}  // namespace epsm
