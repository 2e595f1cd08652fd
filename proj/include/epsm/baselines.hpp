#pragma once

// Comparison searchers sharing the Occurrences contract of epsm::search.

#include <array>
#include <cstdint>

#include "epsm/text.hpp"

namespace epsm {

inline constexpr std::size_t kMachineWordBits = 64;

struct BaselineConfig {
  unsigned q = 2;
  std::size_t word_limit = kMachineWordBits;
};

Occurrences naive_search(const Pattern& p, const Text& t);

// Bit-parallel Shift-Or. One 64-bit state, so m <= 64.
class ShiftOrMatcher {
 public:
  // Throws UsageError when m exceeds the word limit.
  explicit ShiftOrMatcher(const Pattern& p, std::size_t word_limit = kMachineWordBits);

  Occurrences find_all(const Text& t) const;

 private:
  std::array<std::uint64_t, 256> masks_;
  std::uint64_t accept_;
  std::size_t m_;
};

// Simplified backward nondeterministic DAWG matching with a q-gram head:
// each window is entered by reading its last q characters at once.
class SbndmQMatcher {
 public:
  // Throws UsageError unless 1 <= q <= m <= word limit.
  SbndmQMatcher(const Pattern& p, unsigned q, std::size_t word_limit = kMachineWordBits);

  Occurrences find_all(const Text& t) const;

 private:
  std::array<std::uint64_t, 256> masks_;
  std::uint64_t keep_;
  std::size_t m_;
  unsigned q_;
};

inline Occurrences shift_or_search(const Pattern& p, const Text& t) { return ShiftOrMatcher(p).find_all(t); }

inline Occurrences sbndm_q_search(const Pattern& p, const Text& t, unsigned q = BaselineConfig{}.q) {
  return SbndmQMatcher(p, q).find_all(t);
}

}  // namespace epsm
