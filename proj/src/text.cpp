#include "epsm/text.hpp"

#include <cstring>

namespace epsm {

Text::Text(std::span<const std::uint8_t> bytes) : chunks_(bytes.size() / kBlockSize + 1), size_(bytes.size()) {
  std::memset(chunks_.data(), 0, chunks_.size() * sizeof(Chunk));
  if (!bytes.empty()) std::memcpy(chunks_.data(), bytes.data(), bytes.size());
}

Pattern::Pattern(std::span<const std::uint8_t> bytes) : bytes_(bytes.begin(), bytes.end()) {
  if (bytes_.empty()) throw UsageError("pattern must not be empty");
}

bool verify(const Pattern& p, const Text& t, std::size_t s) {
  const std::size_t m = p.size();
  const std::size_t n = t.size();
  if (s > n || m > n - s) return false;
  return std::memcmp(t.data() + s, p.data(), m) == 0;
}

}  // namespace epsm
