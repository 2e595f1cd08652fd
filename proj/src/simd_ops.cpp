#include "epsm/packed_word.hpp"
#include "ops_sse.hpp"

namespace epsm {

bool simd_available() {
  static const bool ok = __builtin_cpu_supports("sse4.2") && __builtin_cpu_supports("popcnt");
  return ok;
}

namespace simd {

namespace {

using Block = detail::SseOps::Block;

Block load_word(const Word& a) {
  if (!simd_available()) throw UsageError("SIMD backend unavailable on this CPU");
  if (!(a.config() == WordConfig::sse())) throw UsageError("SIMD backend requires w = 128, gamma = 8");
  return detail::SseOps::load_unaligned(a.chars().data());
}

Word store_word(Block b) {
  alignas(16) std::uint8_t buf[16];
  _mm_store_si128(reinterpret_cast<__m128i*>(buf), b.v);
  return Word(WordConfig::sse(), buf);
}

Block load_short(std::span<const std::uint8_t> b) {
  return detail::SseOps::load_prefix(b.data(), std::min<std::size_t>(b.size(), 16));
}

}  // namespace

BlockMask wscmp(const Word& a, const Word& b) {
  return BlockMask(detail::SseOps::cmp(load_word(a), load_word(b)), 16);
}

BlockMask wsmatch_exact(const Word& a, std::span<const std::uint8_t> b) {
  const Block block = load_word(a);
  if (b.empty() || b.size() > 16) throw UsageError("wsmatch needs 1 <= k <= alpha");
  std::uint32_t r = 0xFFFFu;
  for (std::size_t j = 0; j < b.size(); ++j) r &= detail::SseOps::cmp(block, detail::SseOps::broadcast(b[j])) >> j;
  return BlockMask(r, 16);
}

BlockMask wsmatch_filter4(const Word& a, std::span<const std::uint8_t> b) {
  const Block block = load_word(a);
  if (b.size() < 4) throw UsageError("wsmatch_filter4 needs a prefix of at least 4 characters");
  return BlockMask(detail::SseOps::filter4(block, load_short(b)), 16);
}

Word wsblend(const Word& a, const Word& b) { return store_word(detail::SseOps::blend(load_word(a), load_word(b))); }

std::uint32_t wscrc(const Word& a) { return detail::SseOps::crc(load_word(a)); }

Word broadcast(std::uint8_t c) {
  if (!simd_available()) throw UsageError("SIMD backend unavailable on this CPU");
  return store_word(detail::SseOps::broadcast(c));
}

}  // namespace simd
}  // namespace epsm
