#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "epsm/errors.hpp"

namespace epsm {

inline constexpr std::size_t kBlockSize = 16;

// Start positions of a pattern in a text: strictly increasing, no duplicates.
using Occurrences = std::vector<std::size_t>;

// Searchable text. Storage is 16-byte aligned and zero padded so that every
// aligned block touching [0, n] can be loaded whole, including the block that
// starts at floor(n / 16) * 16.
class Text {
 public:
  Text() : Text(std::span<const std::uint8_t>{}) {}
  explicit Text(std::span<const std::uint8_t> bytes);
  explicit Text(std::string_view s)
      : Text(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(s.data()), s.size())) {}

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // Number of bytes that may be read, a multiple of kBlockSize, > size().
  std::size_t padded_size() const { return chunks_.size() * kBlockSize; }

  // Number of complete aligned blocks, floor(n / 16).
  std::size_t full_blocks() const { return size_ / kBlockSize; }

  const std::uint8_t* data() const { return chunks_.front().bytes; }
  std::span<const std::uint8_t> bytes() const { return {data(), size_}; }
  std::string_view view() const { return {reinterpret_cast<const char*>(data()), size_}; }

 private:
  struct alignas(kBlockSize) Chunk {
    std::uint8_t bytes[kBlockSize];
  };

  std::vector<Chunk> chunks_;
  std::size_t size_ = 0;
};

class Pattern {
 public:
  // Throws UsageError when empty.
  explicit Pattern(std::span<const std::uint8_t> bytes);
  explicit Pattern(std::string_view s)
      : Pattern(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(s.data()), s.size())) {}

  std::size_t size() const { return bytes_.size(); }
  const std::uint8_t* data() const { return bytes_.data(); }
  std::uint8_t operator[](std::size_t i) const { return bytes_[i]; }
  std::span<const std::uint8_t> bytes() const { return bytes_; }
  std::string_view view() const { return {reinterpret_cast<const char*>(bytes_.data()), bytes_.size()}; }

 private:
  std::vector<std::uint8_t> bytes_;
};

// True iff 0 <= s <= n - m and t[s .. s+m-1] == p.
bool verify(const Pattern& p, const Text& t, std::size_t s);

}  // namespace epsm
