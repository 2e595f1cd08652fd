// Built when the SSE4.2 backend is disabled at configure time.

#include "detail.hpp"

namespace epsm {

bool simd_available() { return false; }

namespace detail {

Occurrences epsm_a_simd(const Pattern&, const Text&, SearchProbe*) { throw_simd_unavailable(); }
Occurrences epsm_b_simd(const Pattern&, const Text&, SearchProbe*) { throw_simd_unavailable(); }
Occurrences epsm_c_simd(const Pattern&, const Text&, const FingerprintTable&, SearchProbe*) {
  throw_simd_unavailable();
}
std::uint32_t crc_block_simd(const std::uint8_t*) { throw_simd_unavailable(); }

}  // namespace detail

namespace simd {

BlockMask wscmp(const Word&, const Word&) { detail::throw_simd_unavailable(); }
BlockMask wsmatch_exact(const Word&, std::span<const std::uint8_t>) { detail::throw_simd_unavailable(); }
BlockMask wsmatch_filter4(const Word&, std::span<const std::uint8_t>) { detail::throw_simd_unavailable(); }
Word wsblend(const Word&, const Word&) { detail::throw_simd_unavailable(); }
std::uint32_t wscrc(const Word&) { detail::throw_simd_unavailable(); }
Word broadcast(std::uint8_t) { detail::throw_simd_unavailable(); }

}  // namespace simd
}  // namespace epsm
