#include "epsm/selftest.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <sstream>

#include "epsm/baselines.hpp"
#include "epsm/epsm.hpp"

namespace epsm {

std::string escape_bytes(std::span<const std::uint8_t> bytes, std::size_t limit) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bytes.size() && i < limit; ++i) {
    const std::uint8_t c = bytes[i];
    if (c == '\\') {
      out += "\\\\";
    } else if (c >= 0x20 && c < 0x7f) {
      out += static_cast<char>(c);
    } else {
      out += "\\x";
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  if (bytes.size() > limit) out += "...";
  return out;
}

std::vector<std::uint8_t> unescape_bytes(std::string_view s) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out.push_back(static_cast<std::uint8_t>(s[i]));
      continue;
    }
    if (i + 1 < s.size() && s[i + 1] == '\\') {
      out.push_back('\\');
      ++i;
    } else if (i + 3 < s.size() && s[i + 1] == 'x' && hex(s[i + 2]) >= 0 && hex(s[i + 3]) >= 0) {
      out.push_back(static_cast<std::uint8_t>(hex(s[i + 2]) * 16 + hex(s[i + 3])));
      i += 3;
    } else {
      throw UsageError("malformed escape in '" + std::string(s) + "' (use \\xNN or \\\\)");
    }
  }
  return out;
}

std::string Counterexample::describe() const {
  auto list = [](const Occurrences& occ) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < occ.size() && i < 20; ++i) out << (i ? "," : "") << occ[i];
    if (occ.size() > 20) out << ",... (" << occ.size() << " total)";
    out << '}';
    return out.str();
  };
  std::ostringstream out;
  out << "algorithm: " << algorithm << "\n"
      << "pattern:   \"" << pattern << "\"\n"
      << "text (n=" << text_size << "): \"" << text << "\"\n"
      << "expected:  " << list(expected) << "\n"
      << "got:       " << list(got) << "\n";
  return out.str();
}

std::vector<NamedSearcher> default_searchers() {
  std::vector<Backend> backends{Backend::reference};
  if (simd_available()) backends.push_back(Backend::simd);

  std::vector<NamedSearcher> out;
  for (Backend b : backends) {
    const std::string tag = std::string("/") + to_string(b);
    out.push_back({"search" + tag, 1, SIZE_MAX, [b](const Pattern& p, const Text& t) { return search(p, t, b); }});
    out.push_back({"epsm_a" + tag, 1, SIZE_MAX, [b](const Pattern& p, const Text& t) { return epsm_a(p, t, b); }});
    out.push_back({"epsm_b" + tag, 4, SIZE_MAX, [b](const Pattern& p, const Text& t) { return epsm_b(p, t, b); }});
    out.push_back({"epsm_c" + tag, 2 * kAlpha, SIZE_MAX,
                   [b](const Pattern& p, const Text& t) { return epsm_c(p, t, kDefaultFingerprintBits, b); }});
  }
  out.push_back({"shift_or", 1, kMachineWordBits, shift_or_search});
  out.push_back({"sbndm_q2", 2, kMachineWordBits,
                 [](const Pattern& p, const Text& t) { return sbndm_q_search(p, t, 2); }});
  return out;
}

namespace {

constexpr std::array<std::size_t, 5> kAlphabetSizes = {2, 4, 20, 64, 256};
constexpr std::array<std::size_t, 7> kTextSizes = {0, 1, 15, 16, 17, 1000, 100000};

class TrialGenerator {
 public:
  explicit TrialGenerator(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

  std::array<std::uint8_t, 16> block() {
    std::array<std::uint8_t, 16> b;
    // Small alphabets make equal characters and prefix hits likely.
    const std::size_t sigma = kAlphabetSizes[uniform(0, kAlphabetSizes.size() - 1)];
    for (auto& c : b) c = static_cast<std::uint8_t>(uniform(0, sigma - 1));
    return b;
  }

  std::vector<std::uint8_t> alphabet(std::size_t sigma) {
    std::vector<std::uint8_t> all(256);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng_);
    all.resize(sigma);
    return all;
  }

  std::vector<std::uint8_t> string(const std::vector<std::uint8_t>& sigma, std::size_t len) {
    std::vector<std::uint8_t> s(len);
    for (auto& c : s) c = sigma[uniform(0, sigma.size() - 1)];
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

std::optional<Counterexample> backend_mismatch(TrialGenerator& gen, std::size_t& checks) {
  const auto a_bytes = gen.block();
  auto b_bytes = gen.block();
  if (gen.uniform(0, 3) == 0) b_bytes = a_bytes;
  const Word a(WordConfig::sse(), a_bytes);
  const Word b(WordConfig::sse(), b_bytes);

  // Short string for wsmatch, often lifted out of `a` so it matches.
  const std::size_t k = gen.uniform(1, 16);
  std::vector<std::uint8_t> probe(b_bytes.begin(), b_bytes.begin() + static_cast<std::ptrdiff_t>(k));
  if (gen.uniform(0, 1) == 0) {
    const std::size_t at = gen.uniform(0, 16 - k);
    std::copy_n(a_bytes.begin() + static_cast<std::ptrdiff_t>(at), k, probe.begin());
  }

  auto fail = [&](const char* op, std::uint64_t want, std::uint64_t got) {
    Counterexample cx;
    cx.algorithm = std::string("backend ") + op;
    cx.pattern = escape_bytes(b_bytes);
    cx.text = escape_bytes(a_bytes);
    cx.text_size = 16;
    cx.expected = {static_cast<std::size_t>(want)};
    cx.got = {static_cast<std::size_t>(got)};
    return cx;
  };

  ++checks;
  if (auto r = reference::wscmp(a, b).bits(), s = simd::wscmp(a, b).bits(); r != s) return fail("wscmp", r, s);
  if (auto r = reference::wsmatch_exact(a, probe).bits(), s = simd::wsmatch_exact(a, probe).bits(); r != s) {
    return fail("wsmatch_exact", r, s);
  }
  if (k >= 4) {
    if (auto r = reference::wsmatch_filter4(a, probe).bits(), s = simd::wsmatch_filter4(a, probe).bits(); r != s) {
      return fail("wsmatch_filter4", r, s);
    }
  }
  if (reference::wsblend(a, b) != simd::wsblend(a, b)) return fail("wsblend", 0, 1);
  if (auto r = reference::wscrc(a), s = simd::wscrc(a); r != s) return fail("wscrc", r, s);
  if (reference::broadcast(WordConfig::sse(), a_bytes[0]) != simd::broadcast(a_bytes[0])) {
    return fail("broadcast", a_bytes[0], 0);
  }
  return std::nullopt;
}

}  // namespace

SelftestResult run_selftest(const SelftestOptions& options, const std::vector<NamedSearcher>& searchers) {
  if (options.trials == 0) throw UsageError("need at least one trial");
  SelftestResult result;
  TrialGenerator gen(options.seed);

  if (simd_available()) {
    for (std::size_t i = 0; i < options.trials; ++i) {
      if (auto cx = backend_mismatch(gen, result.backend_checks)) {
        result.failure = std::move(cx);
        return result;
      }
    }
  }

  for (std::size_t i = 0; i < options.trials; ++i) {
    const std::size_t sigma = kAlphabetSizes[gen.uniform(0, kAlphabetSizes.size() - 1)];
    // The 10^5 text is drawn less often to keep a trial cheap.
    std::size_t n = kTextSizes[gen.uniform(0, kTextSizes.size() - 2)];
    if (gen.uniform(0, 15) == 0) n = kTextSizes.back();
    const std::size_t m = gen.uniform(1, 64);

    const auto letters = gen.alphabet(sigma);
    auto text = gen.string(letters, n);
    auto pat = gen.string(letters, m);
    if (m <= n) {
      if (gen.uniform(0, 1) == 0) {
        const std::size_t at = gen.uniform(0, n - m);
        std::copy_n(text.begin() + static_cast<std::ptrdiff_t>(at), m, pat.begin());
      }
      const std::array<std::size_t, 4> plants = {0, n - m, (n - m) / 16 * 16, gen.uniform(0, n - m)};
      for (std::size_t at : plants) {
        if (gen.uniform(0, 1) == 0) std::copy(pat.begin(), pat.end(), text.begin() + static_cast<std::ptrdiff_t>(at));
      }
    }

    const Pattern p(pat);
    const Text t(text);
    const Occurrences expected = naive_search(p, t);
    for (const auto& s : searchers) {
      if (m < s.min_m || m > s.max_m) continue;
      ++result.oracle_checks;
      Occurrences got = s.run(p, t);
      if (got != expected) {
        result.failure = Counterexample{s.name, escape_bytes(pat), escape_bytes(text, 256), n, expected, std::move(got)};
        return result;
      }
    }
  }
  return result;
}

}  // namespace epsm
