#pragma once

// Word-size packed instructions.
//
// A Word is a block of alpha characters of gamma bits each (w = alpha * gamma
// bits in total). Two backends are provided:
//
//   epsm::reference  portable and generic over (w, gamma); alpha <= 64.
//   epsm::simd       SSE4.2, fixed at w = 128, gamma = 8, alpha = 16.
//
// Both return bit-identical results for the configurations they share.
//
// Mask convention: bit i of a BlockMask refers to character offset i of the
// block, bit 0 being offset 0 (the lowest address). Character i of a Word
// occupies bits [i*gamma, (i+1)*gamma) of its little-endian w-bit integer.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "epsm/errors.hpp"

namespace epsm {

class WordConfig {
 public:
  // Throws UsageError unless gamma in [1, 8] divides w, w is a multiple of 8,
  // and alpha = w / gamma is even and at most 64.
  WordConfig(unsigned word_bits, unsigned char_bits);

  static WordConfig sse() { return WordConfig(128, 8); }

  unsigned word_bits() const { return word_bits_; }
  unsigned char_bits() const { return char_bits_; }
  unsigned alpha() const { return word_bits_ / char_bits_; }
  unsigned max_char() const { return (1u << char_bits_) - 1; }

  friend bool operator==(const WordConfig&, const WordConfig&) = default;

 private:
  unsigned word_bits_;
  unsigned char_bits_;
};

class BlockMask {
 public:
  BlockMask(std::uint64_t bits, unsigned alpha);

  static BlockMask empty(unsigned alpha) { return BlockMask(0, alpha); }
  static BlockMask full(unsigned alpha);

  std::uint64_t bits() const { return bits_; }
  unsigned alpha() const { return alpha_; }
  bool test(unsigned offset) const { return offset < alpha_ && ((bits_ >> offset) & 1u); }

  friend bool operator==(const BlockMask&, const BlockMask&) = default;

 private:
  std::uint64_t bits_;
  unsigned alpha_;
};

// Calls f(offset) for each set bit, lowest offset first, in O(popcount).
template <class F>
inline void for_each_set_bit(std::uint64_t bits, F&& f) {
  while (bits != 0) {
    f(static_cast<unsigned>(std::countr_zero(bits)));
    bits &= bits - 1;
  }
}

std::vector<unsigned> mask_positions(const BlockMask& r);
inline unsigned popcount(const BlockMask& r) { return static_cast<unsigned>(std::popcount(r.bits())); }

class Word {
 public:
  static constexpr unsigned kMaxAlpha = 64;

  // All-zero word.
  explicit Word(WordConfig config);

  // One character per element; throws UsageError on wrong count or a value
  // that does not fit in gamma bits.
  Word(WordConfig config, std::span<const std::uint8_t> chars);

  // From the packed little-endian representation (w / 8 bytes).
  static Word from_packed(WordConfig config, std::span<const std::uint8_t> bytes);

  const WordConfig& config() const { return config_; }
  unsigned alpha() const { return config_.alpha(); }
  std::uint8_t operator[](unsigned i) const { return chars_[i]; }
  std::span<const std::uint8_t> chars() const { return {chars_.data(), config_.alpha()}; }

  // Packed little-endian representation, w / 8 bytes.
  std::vector<std::uint8_t> packed() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.config_ == b.config_ && std::equal(a.chars().begin(), a.chars().end(), b.chars().begin());
  }

 private:
  WordConfig config_;
  std::array<std::uint8_t, kMaxAlpha> chars_{};
};

enum class Backend { reference, simd };

const char* to_string(Backend b);

// True when the SIMD backend was compiled in and the CPU supports SSE4.2.
bool simd_available();

// EPSM_BACKEND=reference|simd when set, otherwise simd when available.
// Throws UsageError for an unknown value or an unavailable forced backend.
Backend default_backend();

// CRC-32C (Castagnoli, reflected), initial accumulator as given, no final
// inversion: the semantics of the SSE4.2 crc32 instruction family.
std::uint32_t crc32c_update(std::uint32_t crc, std::span<const std::uint8_t> bytes);

namespace reference {

BlockMask wscmp(const Word& a, const Word& b);

// Bit i set iff a[i + j] == b[j] for all j < k, k = b.size() in [1, alpha].
BlockMask wsmatch_exact(const Word& a, std::span<const std::uint8_t> b);

// Bit i, for i < alpha / 2, set iff a[i + j] == b[j] for j < 4. Upper half
// always clear. Requires b.size() >= 4; only b[0..3] is consulted.
BlockMask wsmatch_filter4(const Word& a, std::span<const std::uint8_t> b);

// a[alpha/2 .. alpha-1] followed by b[0 .. alpha/2-1].
Word wsblend(const Word& a, const Word& b);

// CRC-32C of the packed representation, low address first, from 0.
std::uint32_t wscrc(const Word& a);

Word broadcast(WordConfig config, std::uint8_t c);

}  // namespace reference

// Same contracts as epsm::reference, restricted to WordConfig::sse(). Every
// function throws UsageError when the SIMD backend is unavailable or a Word
// has another configuration.
namespace simd {

BlockMask wscmp(const Word& a, const Word& b);
BlockMask wsmatch_exact(const Word& a, std::span<const std::uint8_t> b);
BlockMask wsmatch_filter4(const Word& a, std::span<const std::uint8_t> b);
Word wsblend(const Word& a, const Word& b);
std::uint32_t wscrc(const Word& a);
Word broadcast(std::uint8_t c);

}  // namespace simd

}  // namespace epsm
