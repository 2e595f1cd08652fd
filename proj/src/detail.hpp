#pragma once

// Backend-specific entry points behind the public epsm_* functions.

#include <cstdint>

#include "epsm/epsm.hpp"

namespace epsm::detail {

#define EPSM_DECLARE_KERNELS(suffix)                                                                   \
  Occurrences epsm_a_##suffix(const Pattern& p, const Text& t, SearchProbe* probe);                    \
  Occurrences epsm_b_##suffix(const Pattern& p, const Text& t, SearchProbe* probe);                    \
  Occurrences epsm_c_##suffix(const Pattern& p, const Text& t, const FingerprintTable& table,          \
                              SearchProbe* probe);                                                     \
  std::uint32_t crc_block_##suffix(const std::uint8_t* block);

EPSM_DECLARE_KERNELS(reference)
EPSM_DECLARE_KERNELS(simd)

#undef EPSM_DECLARE_KERNELS

[[noreturn]] void throw_simd_unavailable();

}  // namespace epsm::detail
