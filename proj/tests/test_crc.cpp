#include <doctest.h>

#include <array>
#include <string_view>

#include "epsm/packed_word.hpp"
#include "oracles.hpp"

using namespace epsm;

namespace {

std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace

TEST_CASE("bit-serial oracle reproduces the standard CRC-32C check value") {
  // Conventional framing: init ~0, final inversion.
  CHECK((oracle::crc32c_bitwise(as_bytes("123456789"), 0xFFFFFFFFu) ^ 0xFFFFFFFFu) == 0xE3069283u);
}

TEST_CASE("table CRC matches the bit-serial oracle") {
  CHECK(crc32c_update(0xFFFFFFFFu, as_bytes("123456789")) == oracle::crc32c_bitwise(as_bytes("123456789"), 0xFFFFFFFFu));
  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto data = rng.bytes(rng.between(0, 100));
    const auto seed = static_cast<std::uint32_t>(rng.engine());
    CHECK(crc32c_update(seed, data) == oracle::crc32c_bitwise(data, seed));
  }
}

TEST_CASE("wscrc frozen values") {
  const std::array<std::uint8_t, 16> zeros{};
  std::array<std::uint8_t, 16> as{};
  as.fill('a');
  std::array<std::uint8_t, 16> ramp{};
  for (int i = 0; i < 16; ++i) ramp[i] = static_cast<std::uint8_t>(i);

  const auto sse = WordConfig::sse();
  CHECK(reference::wscrc(Word(sse, zeros)) == 0x00000000u);
  CHECK(reference::wscrc(Word(sse, as)) == 0x0495FCD9u);
  CHECK(reference::wscrc(Word(sse, ramp)) == 0x9BB99201u);
  CHECK(reference::wscrc(Word(sse, ramp)) == reference::wscrc(Word(sse, ramp)));
  if (simd_available()) {
    CHECK(simd::wscrc(Word(sse, zeros)) == 0x00000000u);
    CHECK(simd::wscrc(Word(sse, as)) == 0x0495FCD9u);
    CHECK(simd::wscrc(Word(sse, ramp)) == 0x9BB99201u);
  }
}

TEST_CASE("wscrc agrees with the bit-serial oracle on random blocks") {
  oracle::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto bytes = rng.bytes(16);
    const Word w(WordConfig::sse(), bytes);
    const std::uint32_t want = oracle::crc32c_bitwise(bytes);
    REQUIRE(reference::wscrc(w) == want);
    if (simd_available()) REQUIRE(simd::wscrc(w) == want);
  }
}

TEST_CASE("wscrc on narrow characters hashes the packed representation") {
  const WordConfig cfg(48, 4);
  oracle::Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto packed = rng.bytes(6);
    const Word w = Word::from_packed(cfg, packed);
    CHECK(w.packed() == packed);
    CHECK(reference::wscrc(w) == oracle::crc32c_bitwise(packed));
  }
}

TEST_CASE("masked fingerprints spread over 2^11 buckets") {
  oracle::Rng rng(2024);
  std::vector<std::uint32_t> counts(1u << 11, 0);
  const int words = 100000;
  for (int i = 0; i < words; ++i) {
    const auto bytes = rng.bytes(16);
    ++counts[reference::wscrc(Word(WordConfig::sse(), bytes)) & 0x7FFu];
  }
  const double mean = static_cast<double>(words) / counts.size();
  CHECK(*std::max_element(counts.begin(), counts.end()) <= 10 * mean);
}
