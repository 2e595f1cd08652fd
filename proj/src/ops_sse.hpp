#pragma once

// Only include from translation units compiled with -msse4.2.

#include <nmmintrin.h>
#include <smmintrin.h>

#include <cstdint>
#include <cstring>

namespace epsm::detail {

struct SseOps {
  struct Block {
    __m128i v;
  };

  static Block load(const std::uint8_t* p) { return {_mm_load_si128(reinterpret_cast<const __m128i*>(p))}; }

  static Block load_unaligned(const std::uint8_t* p) {
    return {_mm_loadu_si128(reinterpret_cast<const __m128i*>(p))};
  }

  static Block load_prefix(const std::uint8_t* p, std::size_t k) {
    alignas(16) std::uint8_t buf[16] = {};
    std::memcpy(buf, p, k);
    return load(buf);
  }

  static Block broadcast(std::uint8_t c) { return {_mm_set1_epi8(static_cast<char>(c))}; }

  static std::uint32_t cmp(Block a, Block b) {
    return static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpeq_epi8(a.v, b.v)));
  }

  // mpsadbw: lane i = sum_{j<4} |a[i+j] - b[j]| for i < 8. A zero lane is a
  // 4-byte prefix match; packing squeezes the eight lanes into one mask byte.
  static std::uint32_t filter4(Block a, Block b) {
    const __m128i sad = _mm_mpsadbw_epu8(a.v, b.v, 0);
    const __m128i hit = _mm_cmpeq_epi16(sad, _mm_setzero_si128());
    return static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_packs_epi16(hit, _mm_setzero_si128())));
  }

  static Block blend(Block a, Block b) { return {_mm_alignr_epi8(b.v, a.v, 8)}; }

  static std::uint32_t crc(Block a) {
    const auto lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(a.v));
    const auto hi = static_cast<std::uint64_t>(_mm_extract_epi64(a.v, 1));
    return static_cast<std::uint32_t>(_mm_crc32_u64(_mm_crc32_u64(0, lo), hi));
  }
};

}  // namespace epsm::detail
