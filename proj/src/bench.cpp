#include "epsm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "epsm/baselines.hpp"
#include "epsm/epsm.hpp"

namespace epsm {

std::uint64_t occurrence_checksum(const Occurrences& occ) {
  std::uint64_t sum = 0;
  for (std::size_t s : occ) {
    // splitmix64 finalizer
    std::uint64_t z = (static_cast<std::uint64_t>(s) + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    sum += z ^ (z >> 31);
  }
  return sum;
}

namespace {

using Runner = std::function<Occurrences(const Pattern&)>;

struct Algorithm {
  std::string name;
  std::size_t min_m = 1;
  std::size_t max_m = SIZE_MAX;
  std::function<Runner(const Text&)> bind;
};

Algorithm resolve_algorithm(const std::string& name, unsigned default_q, Backend backend) {
  if (name == "epsm") {
    return {name, 1, SIZE_MAX, [backend](const Text& t) -> Runner {
              return [&t, backend](const Pattern& p) { return search(p, t, backend); };
            }};
  }
  if (name == "naive") {
    return {name, 1, SIZE_MAX,
            [](const Text& t) -> Runner { return [&t](const Pattern& p) { return naive_search(p, t); }; }};
  }
  if (name == "shift_or") {
    return {name, 1, kMachineWordBits, [](const Text& t) -> Runner {
              return [&t](const Pattern& p) { return ShiftOrMatcher(p).find_all(t); };
            }};
  }
  if (name.rfind("sbndm_q", 0) == 0) {
    unsigned q = default_q;
    const std::string suffix = name.substr(7);
    if (!suffix.empty()) {
      if (suffix.find_first_not_of("0123456789") != std::string::npos || suffix.size() > 2) {
        throw UsageError("bad q-gram size in algorithm '" + name + "'");
      }
      q = static_cast<unsigned>(std::stoul(suffix));
    }
    if (q == 0) throw UsageError("q must be at least 1");
    return {name, q, kMachineWordBits, [q](const Text& t) -> Runner {
              return [&t, q](const Pattern& p) { return SbndmQMatcher(p, q).find_all(t); };
            }};
  }
  throw UsageError("unknown algorithm '" + name + "' (epsm, naive, shift_or, sbndm_q[N])");
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

std::vector<std::string> integrity_violations(const BenchReport& report) {
  std::map<std::pair<std::string, std::size_t>, const BenchRow*> first;
  std::vector<std::string> out;
  for (const auto& row : report.rows) {
    if (!row.supported) continue;
    auto [it, inserted] = first.emplace(std::make_pair(row.corpus, row.m), &row);
    if (inserted) continue;
    const BenchRow& ref = *it->second;
    if (ref.total_occ != row.total_occ || ref.checksum != row.checksum || ref.patterns != row.patterns) {
      out.push_back(row.corpus + " m=" + std::to_string(row.m) + ": " + row.algorithm + " (" +
                    std::to_string(row.total_occ) + " occ) disagrees with " + ref.algorithm + " (" +
                    std::to_string(ref.total_occ) + " occ)");
    }
  }
  return out;
}

BenchReport run_benchmark(const Text& t, const BenchConfig& cfg, std::string_view corpus) {
  if (cfg.lengths.empty()) throw UsageError("no pattern lengths given");
  if (cfg.algorithms.empty()) throw UsageError("no algorithms given");
  if (cfg.patterns_per_length == 0) throw UsageError("need at least one pattern per length");
  if (cfg.repetitions == 0) throw UsageError("need at least one repetition");
  for (std::size_t m : cfg.lengths) {
    if (m == 0 || m > t.size()) {
      throw UsageError("pattern length " + std::to_string(m) + " outside [1, " + std::to_string(t.size()) + "]");
    }
  }

  const Backend backend = cfg.backend.value_or(default_backend());
  std::vector<Algorithm> algorithms;
  for (const auto& name : cfg.algorithms) algorithms.push_back(resolve_algorithm(name, cfg.q, backend));

  using Clock = std::chrono::steady_clock;
  BenchReport report;
  for (std::size_t m : cfg.lengths) {
    const auto patterns = extract_patterns(t, m, cfg.patterns_per_length, cfg.seed ^ (0x9E3779B97F4A7C15ull * m));
    const std::size_t first_row = report.rows.size();

    for (const auto& algo : algorithms) {
      BenchRow row{std::string(corpus), algo.name, m, patterns.size()};
      if (m < algo.min_m || m > algo.max_m) {
        row.supported = false;
        report.rows.push_back(row);
        continue;
      }
      const Runner run = algo.bind(t);
      std::vector<double> per_pattern;
      per_pattern.reserve(patterns.size());
      std::vector<double> reps(cfg.repetitions);
      for (const auto& p : patterns) {
        for (std::size_t r = 0; r < cfg.repetitions; ++r) {
          const auto start = Clock::now();
          const Occurrences occ = run(p);
          reps[r] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
          if (r == 0) {
            row.total_occ += occ.size();
            row.checksum += occurrence_checksum(occ);
          }
        }
        per_pattern.push_back(median(reps));
      }
      row.mean_ms = std::accumulate(per_pattern.begin(), per_pattern.end(), 0.0) / static_cast<double>(per_pattern.size());
      row.median_ms = median(per_pattern);
      report.rows.push_back(row);
    }

    BenchReport slice;
    slice.rows.assign(report.rows.begin() + static_cast<std::ptrdiff_t>(first_row), report.rows.end());
    if (auto bad = integrity_violations(slice); !bad.empty()) throw IntegrityError(bad.front());
  }
  return report;
}

}  // namespace epsm
