#pragma once

#include "epsm/packed_word.hpp"

namespace epsm::detail {

// Kernel policy backed by the generic reference instructions at (128, 8).
struct ReferenceOps {
  using Block = Word;

  static Block load(const std::uint8_t* p) { return Word(WordConfig::sse(), std::span<const std::uint8_t>(p, 16)); }

  static Block load_prefix(const std::uint8_t* p, std::size_t k) {
    std::array<std::uint8_t, 16> buf{};
    std::copy_n(p, k, buf.begin());
    return load(buf.data());
  }

  static Block broadcast(std::uint8_t c) { return reference::broadcast(WordConfig::sse(), c); }

  static std::uint32_t cmp(const Block& a, const Block& b) {
    return static_cast<std::uint32_t>(reference::wscmp(a, b).bits());
  }

  static std::uint32_t filter4(const Block& a, const Block& b) {
    return static_cast<std::uint32_t>(reference::wsmatch_filter4(a, b.chars()).bits());
  }

  static Block blend(const Block& a, const Block& b) { return reference::wsblend(a, b); }

  static std::uint32_t crc(const Block& a) { return reference::wscrc(a); }
};

}  // namespace epsm::detail
