#include "epsm/packed_word.hpp"

#include <cstdlib>
#include <string>
#include <string_view>

namespace epsm {

WordConfig::WordConfig(unsigned word_bits, unsigned char_bits) : word_bits_(word_bits), char_bits_(char_bits) {
  if (char_bits == 0 || char_bits > 8) throw UsageError("character width must be in [1, 8] bits");
  if (word_bits == 0 || word_bits % char_bits != 0) throw UsageError("character width must divide the word width");
  if (word_bits % 8 != 0) throw UsageError("word width must be a whole number of bytes");
  const unsigned alpha = word_bits / char_bits;
  if (alpha % 2 != 0) throw UsageError("characters per word must be even");
  if (alpha > Word::kMaxAlpha) throw UsageError("at most 64 characters per word");
}

BlockMask::BlockMask(std::uint64_t bits, unsigned alpha) : bits_(bits), alpha_(alpha) {
  if (alpha == 0 || alpha > 64) throw UsageError("mask width must be in [1, 64]");
  if (alpha < 64 && (bits >> alpha) != 0) throw UsageError("mask has bits beyond alpha");
}

BlockMask BlockMask::full(unsigned alpha) {
  return BlockMask(alpha == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << alpha) - 1, alpha);
}

std::vector<unsigned> mask_positions(const BlockMask& r) {
  std::vector<unsigned> out;
  out.reserve(popcount(r));
  for_each_set_bit(r.bits(), [&](unsigned i) { out.push_back(i); });
  return out;
}

Word::Word(WordConfig config) : config_(config) {}

Word::Word(WordConfig config, std::span<const std::uint8_t> chars) : config_(config) {
  if (chars.size() != config.alpha()) throw UsageError("word needs exactly alpha characters");
  for (unsigned i = 0; i < chars.size(); ++i) {
    if (chars[i] > config.max_char()) throw UsageError("character does not fit the character width");
    chars_[i] = chars[i];
  }
}

Word Word::from_packed(WordConfig config, std::span<const std::uint8_t> bytes) {
  if (bytes.size() != config.word_bits() / 8) throw UsageError("packed word has the wrong byte count");
  Word out(config);
  const unsigned g = config.char_bits();
  for (unsigned i = 0; i < config.alpha(); ++i) {
    unsigned v = 0;
    for (unsigned b = 0; b < g; ++b) {
      const unsigned bit = i * g + b;
      v |= ((bytes[bit / 8] >> (bit % 8)) & 1u) << b;
    }
    out.chars_[i] = static_cast<std::uint8_t>(v);
  }
  return out;
}

std::vector<std::uint8_t> Word::packed() const {
  std::vector<std::uint8_t> out(config_.word_bits() / 8, 0);
  const unsigned g = config_.char_bits();
  for (unsigned i = 0; i < config_.alpha(); ++i) {
    for (unsigned b = 0; b < g; ++b) {
      const unsigned bit = i * g + b;
      out[bit / 8] |= static_cast<std::uint8_t>(((chars_[i] >> b) & 1u) << (bit % 8));
    }
  }
  return out;
}

const char* to_string(Backend b) { return b == Backend::simd ? "simd" : "reference"; }

Backend default_backend() {
  const char* env = std::getenv("EPSM_BACKEND");
  if (env == nullptr || *env == '\0') return simd_available() ? Backend::simd : Backend::reference;
  const std::string_view v(env);
  if (v == "reference") return Backend::reference;
  if (v == "simd") {
    if (!simd_available()) throw UsageError("EPSM_BACKEND=simd but the SIMD backend is unavailable");
    return Backend::simd;
  }
  throw UsageError("EPSM_BACKEND must be 'reference' or 'simd', got '" + std::string(v) + "'");
}

namespace {

constexpr std::uint32_t kCastagnoliReflected = 0x82F63B78u;

constexpr std::array<std::uint32_t, 256> make_crc_table() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k) c = (c & 1u) ? (c >> 1) ^ kCastagnoliReflected : c >> 1;
    table[i] = c;
  }
  return table;
}

constexpr auto kCrcTable = make_crc_table();

void require_same_config(const Word& a, const Word& b) {
  if (!(a.config() == b.config())) throw UsageError("words have different configurations");
}

}  // namespace

std::uint32_t crc32c_update(std::uint32_t crc, std::span<const std::uint8_t> bytes) {
  for (std::uint8_t byte : bytes) crc = kCrcTable[(crc ^ byte) & 0xFFu] ^ (crc >> 8);
  return crc;
}

namespace reference {

BlockMask wscmp(const Word& a, const Word& b) {
  require_same_config(a, b);
  std::uint64_t bits = 0;
  for (unsigned i = 0; i < a.alpha(); ++i) {
    if (a[i] == b[i]) bits |= std::uint64_t{1} << i;
  }
  return BlockMask(bits, a.alpha());
}

BlockMask wsmatch_exact(const Word& a, std::span<const std::uint8_t> b) {
  const unsigned alpha = a.alpha();
  if (b.empty() || b.size() > alpha) throw UsageError("wsmatch needs 1 <= k <= alpha");
  const unsigned k = static_cast<unsigned>(b.size());
  std::uint64_t bits = 0;
  for (unsigned i = 0; i + k <= alpha; ++i) {
    unsigned j = 0;
    while (j < k && a[i + j] == b[j]) ++j;
    if (j == k) bits |= std::uint64_t{1} << i;
  }
  return BlockMask(bits, alpha);
}

BlockMask wsmatch_filter4(const Word& a, std::span<const std::uint8_t> b) {
  if (b.size() < 4) throw UsageError("wsmatch_filter4 needs a prefix of at least 4 characters");
  const unsigned alpha = a.alpha();
  std::uint64_t bits = 0;
  for (unsigned i = 0; i < alpha / 2 && i + 4 <= alpha; ++i) {
    if (a[i] == b[0] && a[i + 1] == b[1] && a[i + 2] == b[2] && a[i + 3] == b[3]) bits |= std::uint64_t{1} << i;
  }
  return BlockMask(bits, alpha);
}

Word wsblend(const Word& a, const Word& b) {
  require_same_config(a, b);
  const unsigned alpha = a.alpha();
  const unsigned half = alpha / 2;
  std::array<std::uint8_t, Word::kMaxAlpha> chars{};
  for (unsigned i = 0; i < half; ++i) {
    chars[i] = a[half + i];
    chars[half + i] = b[i];
  }
  return Word(a.config(), std::span<const std::uint8_t>(chars.data(), alpha));
}

std::uint32_t wscrc(const Word& a) {
  if (a.config().char_bits() == 8) return crc32c_update(0, a.chars());
  return crc32c_update(0, a.packed());
}

Word broadcast(WordConfig config, std::uint8_t c) {
  std::array<std::uint8_t, Word::kMaxAlpha> chars{};
  chars.fill(c);
  return Word(config, std::span<const std::uint8_t>(chars.data(), config.alpha()));
}

}  // namespace reference
}  // namespace epsm
