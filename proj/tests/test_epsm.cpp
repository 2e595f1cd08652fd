#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "epsm/epsm.hpp"
#include "oracles.hpp"

using namespace epsm;

namespace {

class RecordingProbe : public SearchProbe {
 public:
  void block_read(std::size_t offset) override { reads.push_back(offset); }
  void candidate(std::size_t position) override { candidates.push_back(position); }

  std::vector<std::size_t> reads;
  std::vector<std::size_t> candidates;
};

std::vector<Backend> backends() {
  std::vector<Backend> out{Backend::reference};
  if (simd_available()) out.push_back(Backend::simd);
  return out;
}

Occurrences expected(const Pattern& p, const Text& t) { return oracle::occurrences(t.bytes(), p.bytes()); }

std::vector<std::size_t> range(std::size_t lo, std::size_t hi, std::size_t step = 1) {
  std::vector<std::size_t> v;
  for (std::size_t i = lo; i < hi; i += step) v.push_back(i);
  return v;
}

std::string ascii(oracle::Rng& rng, std::size_t n, std::string_view letters) {
  std::string s(n, ' ');
  for (auto& c : s) c = letters[rng.below(letters.size())];
  return s;
}

}  // namespace

TEST_CASE("Text pads to whole blocks with zeros") {
  for (std::size_t n : {0, 1, 15, 16, 17, 33}) {
    const Text t(std::string(n, 'x'));
    CHECK(t.size() == n);
    CHECK(t.padded_size() % kBlockSize == 0);
    CHECK(t.padded_size() >= (n / kBlockSize + 1) * kBlockSize);
    CHECK(reinterpret_cast<std::uintptr_t>(t.data()) % kBlockSize == 0);
    for (std::size_t i = n; i < t.padded_size(); ++i) CHECK(t.data()[i] == 0);
  }
  CHECK_THROWS_AS(Pattern(std::string_view("")), UsageError);
}

TEST_CASE("verify") {
  const Pattern ab("ab");
  const Text t("ab");
  CHECK(verify(ab, t, 0));
  CHECK_FALSE(verify(ab, t, 1));
  CHECK_FALSE(verify(ab, t, 7));

  oracle::Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const std::string text = ascii(rng, rng.between(0, 40), "ab");
    const std::string pat = ascii(rng, rng.between(1, 4), "ab");
    const std::size_t s = rng.between(0, 45);
    const bool want = s + pat.size() <= text.size() && text.compare(s, pat.size(), pat) == 0;
    CHECK(verify(Pattern(pat), Text(text), s) == want);
  }
}

TEST_CASE("epsm_a examples") {
  for (Backend b : backends()) {
    CAPTURE(to_string(b));
    std::string abab;
    for (int i = 0; i < 16; ++i) abab += "ab";
    CHECK(epsm_a(Pattern("ab"), Text(abab), b) == range(0, 32, 2));
    CHECK(epsm_a(Pattern("aa"), Text("aaaa"), b) == Occurrences{0, 1, 2});
    CHECK(epsm_a(Pattern("xy"), Text(std::string(32, 'a')), b).empty());
    CHECK(epsm_a(Pattern("abc"), Text("ab"), b).empty());
  }
}

TEST_CASE("epsm_a handles patterns longer than alpha/2") {
  oracle::Rng rng(2);
  for (Backend b : backends()) {
    for (int i = 0; i < 200; ++i) {
      const std::string text = ascii(rng, rng.between(0, 300), "ab");
      std::string pat = ascii(rng, rng.between(1, 40), "ab");
      if (pat.size() <= text.size() && rng.below(2)) pat = text.substr(rng.below(text.size() - pat.size() + 1), pat.size());
      const Pattern p(pat);
      const Text t(text);
      REQUIRE(epsm_a(p, t, b) == expected(p, t));
    }
  }
}

TEST_CASE("epsm_b examples") {
  for (Backend b : backends()) {
    CAPTURE(to_string(b));
    std::string zabcdz = "zabcdz" + std::string(26, 'z');
    CHECK(epsm_b(Pattern("abcd"), Text(zabcdz), b) == Occurrences{1});

    const std::string whole = "0123456789abcdef";
    CHECK(epsm_b(Pattern(whole), Text(whole), b) == Occurrences{0});

    // Both occurrences straddle the middle of their block.
    oracle::Rng rng(3);
    std::string text = ascii(rng, 64, "0123456789");
    text.replace(5, 8, "abcdefgh");
    text.replace(21, 8, "abcdefgh");
    const Pattern p("abcdefgh");
    const Text t(text);
    CHECK(epsm_b(p, t, b) == Occurrences{5, 21});

    CHECK_THROWS_AS(epsm_b(Pattern("abc"), t, b), UsageError);
  }
}

TEST_CASE("epsm_b blend path finds starts in the second half of a block") {
  for (Backend b : backends()) {
    for (std::size_t s : {8, 9, 12, 15, 24, 31}) {
      std::string text(64, '.');
      text.replace(s, 6, "needle");
      RecordingProbe probe;
      CHECK(epsm_b(Pattern("needle"), Text(text), b, &probe) == Occurrences{s});
      CHECK(std::find(probe.candidates.begin(), probe.candidates.end(), s) != probe.candidates.end());
    }
  }
}

TEST_CASE("fingerprint table") {
  const auto crc_of = [](const std::uint8_t* p) {
    return oracle::crc32c_bitwise(std::span<const std::uint8_t>(p, 16));
  };

  for (Backend b : backends()) {
    CAPTURE(to_string(b));
    oracle::Rng rng(4);
    const auto bytes = rng.bytes(32);
    const Pattern p32(bytes);
    const FingerprintTable t32(p32, 11, b);
    CHECK(t32.bucket_count() == 2048);
    CHECK(t32.mask() == 0x7FFu);
    CHECK(t32.size() == 17);
    for (std::uint32_t i = 0; i <= 16; ++i) {
      const auto bucket = t32.bucket(crc_of(bytes.data() + i) & 0x7FFu);
      CHECK(std::find(bucket.begin(), bucket.end(), i) != bucket.end());
    }

    const FingerprintTable flat(Pattern(std::string(48, 'a')), 11, b);
    CHECK(flat.bucket(0x4D9).size() == 33);
    CHECK(flat.bucket(0x4D9).front() == 0);
    CHECK(flat.bucket(0x4D9).back() == 32);

    CHECK_THROWS_AS(FingerprintTable(Pattern(std::string(31, 'a')), 11, b), UsageError);
    CHECK_THROWS_AS(FingerprintTable(p32, 0, b), UsageError);
    CHECK_THROWS_AS(FingerprintTable(p32, 33, b), UsageError);
  }
}

TEST_CASE("fingerprint buckets partition the offsets for every width") {
  oracle::Rng rng(5);
  for (unsigned bits : {1u, 4u, 11u, 20u, 21u, 24u, 32u}) {
    CAPTURE(bits);
    const auto bytes = rng.bytes(rng.between(32, 90), 4);
    const FingerprintTable table(Pattern(bytes), bits, Backend::reference);
    const std::uint32_t mask = bits == 32 ? 0xFFFFFFFFu : (1u << bits) - 1;
    CHECK(table.mask() == mask);
    std::size_t seen = 0;
    for (std::size_t i = 0; i + 16 <= bytes.size(); ++i) {
      const std::uint32_t v = oracle::crc32c_bitwise(std::span(bytes).subspan(i, 16)) & mask;
      const auto bucket = table.bucket(v);
      CHECK(std::count(bucket.begin(), bucket.end(), static_cast<std::uint32_t>(i)) == 1);
      CHECK(std::is_sorted(bucket.begin(), bucket.end()));
      ++seen;
    }
    CHECK(table.size() == seen);
  }
}

TEST_CASE("scan plan step") {
  CHECK(ScanPlan::for_length(32).step == 16);
  CHECK(ScanPlan::for_length(47).step == 16);
  CHECK(ScanPlan::for_length(48).step == 32);
  CHECK(ScanPlan::for_length(64).step == 48);
  CHECK_THROWS_AS(ScanPlan::for_length(31), UsageError);
  for (std::size_t m = 32; m < 300; ++m) {
    const auto step = ScanPlan::for_length(m).step;
    CHECK(step % kAlpha == 0);
    CHECK(step > 0);
    CHECK(step <= m - kAlpha);
  }
}

TEST_CASE("epsm_c examples") {
  for (Backend b : backends()) {
    CAPTURE(to_string(b));
    oracle::Rng rng(6);
    const auto bytes = rng.bytes(100000);
    const Text t(bytes);
    const Pattern p{std::span(bytes).subspan(100, 64)};
    const auto got = epsm_c(p, t, kDefaultFingerprintBits, b);
    CHECK(got == expected(p, t));
    CHECK(std::find(got.begin(), got.end(), 100u) != got.end());

    CHECK(epsm_c(Pattern(std::string(32, 'a')), Text(std::string(128, 'a')), 11, b) == range(0, 97));

    std::string absent(40, 'q');
    CHECK(epsm_c(Pattern(absent), t, 11, b) == expected(Pattern(absent), t));
    CHECK(epsm_c(Pattern(std::string(40, 'a')), Text(std::string(128, 'b')), 11, b).empty());

    CHECK_THROWS_AS(epsm_c(Pattern(std::string(31, 'a')), t, 11, b), UsageError);
    CHECK_THROWS_AS(epsm_c(Pattern(std::string(40, 'a')), t, 0, b), UsageError);
  }
}

TEST_CASE("epsm_c stays exact at any fingerprint width") {
  oracle::Rng rng(7);
  for (unsigned bits : {1u, 3u, 11u, 24u, 32u}) {
    const auto bytes = rng.bytes(3000, 2);
    const Text t(bytes);
    const std::size_t m = rng.between(32, 70);
    const Pattern p{std::span(bytes).subspan(rng.below(3000 - m), m)};
    CHECK(epsm_c(p, t, bits, Backend::reference) == expected(p, t));
  }
}

TEST_CASE("dispatch thresholds") {
  CHECK(select_kernel(1) == Kernel::a);
  CHECK(select_kernel(2) == Kernel::a);
  CHECK(select_kernel(3) == Kernel::a);
  CHECK(select_kernel(4) == Kernel::b);
  CHECK(select_kernel(8) == Kernel::b);
  CHECK(select_kernel(16) == Kernel::b);
  CHECK(select_kernel(31) == Kernel::b);
  CHECK(select_kernel(32) == Kernel::c);
  CHECK(select_kernel(40) == Kernel::c);
  CHECK_THROWS_AS(select_kernel(0), UsageError);
}

TEST_CASE("search matches the naive oracle, including text ends and blocks") {
  oracle::Rng rng(8);
  for (Backend b : backends()) {
    CAPTURE(to_string(b));
    for (int i = 0; i < 600; ++i) {
      const std::size_t sigma = std::array<std::size_t, 5>{2, 4, 20, 64, 256}[rng.below(5)];
      const std::size_t n = std::array<std::size_t, 6>{0, 1, 15, 16, 17, 1000}[rng.below(6)];
      const std::size_t m = rng.between(1, 64);
      auto text = rng.bytes(n, sigma);
      auto pat = rng.bytes(m, sigma);
      if (m <= n) {
        for (std::size_t at : {std::size_t{0}, n - m, rng.below(n - m + 1)}) {
          if (rng.below(2)) std::copy(pat.begin(), pat.end(), text.begin() + static_cast<std::ptrdiff_t>(at));
        }
      }
      const Pattern p(pat);
      const Text t(text);
      const auto want = expected(p, t);
      REQUIRE(search(p, t, b) == want);
      REQUIRE(epsm_a(p, t, b) == want);
      if (m >= 4) REQUIRE(epsm_b(p, t, b) == want);
      if (m >= 32) REQUIRE(epsm_c(p, t, 11, b) == want);
    }
  }
}

TEST_CASE("occurrence at the very end of the text is reported") {
  for (Backend b : backends()) {
    for (std::size_t m : {1, 2, 3, 4, 7, 8, 9, 16, 31, 32, 33, 64}) {
      std::string text(200, '.');
      const std::string pat(m, 'x');
      text.replace(200 - m, m, pat);
      CHECK(search(Pattern(pat), Text(text), b) == Occurrences{200 - m});
    }
  }
}

TEST_CASE("overlapping occurrences are all reported") {
  for (Backend b : backends()) {
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 50}, {2, 100}, {5, 77}, {16, 100}, {32, 128}, {40, 200}}) {
      CHECK(search(Pattern(std::string(m, 'a')), Text(std::string(n, 'a')), b).size() == n - m + 1);
    }
  }
}

TEST_CASE("pattern longer than the text yields nothing") {
  for (Backend b : backends()) {
    for (std::size_t m : {1, 3, 8, 40}) {
      CHECK(search(Pattern(std::string(m, 'a')), Text(std::string(m - 1, 'a')), b).empty());
    }
  }
}

TEST_CASE("instrumented block reads stay inside the padded text") {
  oracle::Rng rng(9);
  for (Backend b : backends()) {
    for (int i = 0; i < 300; ++i) {
      const std::size_t n = rng.between(0, 300);
      const std::size_t m = rng.between(1, 64);
      const auto text = rng.bytes(n, 4);
      const Text t(text);
      const Pattern p(rng.bytes(m, 4));
      RecordingProbe probe;
      const auto got = search(p, t, b, &probe);
      for (std::size_t off : probe.reads) {
        REQUIRE(off % kAlpha == 0);
        REQUIRE(off + kAlpha <= t.padded_size());
      }
      for (std::size_t s : got) REQUIRE(s + m <= n);
    }
  }
}

TEST_CASE("epsm_c generates every occurrence as a candidate") {
  oracle::Rng rng(10);
  for (int i = 0; i < 300; ++i) {
    const std::size_t m = rng.between(32, 100);
    const std::size_t n = rng.between(m, 2000);
    auto text = rng.bytes(n, 2);
    const Pattern p{std::span(text).subspan(rng.below(n - m + 1), m)};
    const Text t(text);
    RecordingProbe probe;
    const auto got = epsm_c(p, t, 11, Backend::reference, &probe);
    const std::set<std::size_t> candidates(probe.candidates.begin(), probe.candidates.end());
    for (std::size_t s : expected(p, t)) REQUIRE(candidates.count(s) == 1);
    REQUIRE(got == expected(p, t));
  }
}

TEST_CASE("searches are deterministic and the dispatcher forwards exactly") {
  oracle::Rng rng(11);
  for (Backend b : backends()) {
    for (int i = 0; i < 100; ++i) {
      const auto text = rng.bytes(500, 4);
      const Pattern p{std::span(text).subspan(rng.below(400), rng.between(1, 64))};
      const Text t(text);
      const auto first = search(p, t, b);
      CHECK(search(p, t, b) == first);
      switch (select_kernel(p.size())) {
        case Kernel::a: CHECK(epsm_a(p, t, b) == first); break;
        case Kernel::b: CHECK(epsm_b(p, t, b) == first); break;
        case Kernel::c: CHECK(epsm_c(p, t, kDefaultFingerprintBits, b) == first); break;
      }
    }
  }
}

TEST_CASE("broadcast table covers min(m, alpha/2) characters") {
  const BroadcastTable shortp(Pattern("ab"));
  REQUIRE(shortp.size() == 2);
  CHECK(shortp[0] == reference::broadcast(WordConfig::sse(), 'a'));
  CHECK(shortp[1] == reference::broadcast(WordConfig::sse(), 'b'));
  CHECK(BroadcastTable(Pattern(std::string(20, 'z'))).size() == 8);
}
