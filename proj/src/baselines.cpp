#include "epsm/baselines.hpp"

#include <string>

namespace epsm {

Occurrences naive_search(const Pattern& p, const Text& t) {
  const std::size_t m = p.size();
  const std::size_t n = t.size();
  const std::uint8_t* text = t.data();
  Occurrences occ;
  for (std::size_t s = 0; s + m <= n; ++s) {
    std::size_t j = 0;
    while (j < m && text[s + j] == p[j]) ++j;
    if (j == m) occ.push_back(s);
  }
  return occ;
}

namespace {

void require_word_limit(std::size_t m, std::size_t word_limit, const char* who) {
  if (word_limit > kMachineWordBits) throw UsageError("word limit exceeds the 64-bit state");
  if (m > word_limit) {
    throw UsageError(std::string(who) + " needs m <= " + std::to_string(word_limit) + ", got " + std::to_string(m));
  }
}

std::uint64_t low_bits(std::size_t m) { return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1; }

}  // namespace

ShiftOrMatcher::ShiftOrMatcher(const Pattern& p, std::size_t word_limit) : m_(p.size()) {
  require_word_limit(m_, word_limit, "shift-or");
  masks_.fill(~std::uint64_t{0});
  for (std::size_t i = 0; i < m_; ++i) masks_[p[i]] &= ~(std::uint64_t{1} << i);
  accept_ = std::uint64_t{1} << (m_ - 1);
}

Occurrences ShiftOrMatcher::find_all(const Text& t) const {
  const std::uint8_t* text = t.data();
  const std::size_t n = t.size();
  Occurrences occ;
  std::uint64_t state = ~std::uint64_t{0};
  for (std::size_t j = 0; j < n; ++j) {
    state = (state << 1) | masks_[text[j]];
    if ((state & accept_) == 0) occ.push_back(j + 1 - m_);
  }
  return occ;
}

// Bit (m-1-i) of masks_[c] is set iff p[i] == c. After reading l characters
// backward from window end j, bit b of the state is set iff
// t[j-l+1 .. j] == p[m-1-b .. m-2-b+l]; bit m-1 therefore tracks prefixes.
SbndmQMatcher::SbndmQMatcher(const Pattern& p, unsigned q, std::size_t word_limit)
    : keep_(low_bits(p.size())), m_(p.size()), q_(q) {
  require_word_limit(m_, word_limit, "sbndm_q");
  if (q == 0) throw UsageError("q must be at least 1");
  if (q > m_) throw UsageError("sbndm_q needs q <= m");
  masks_.fill(0);
  for (std::size_t i = 0; i < m_; ++i) masks_[p[i]] |= std::uint64_t{1} << (m_ - 1 - i);
}

Occurrences SbndmQMatcher::find_all(const Text& t) const {
  const std::uint8_t* text = t.data();
  const std::size_t n = t.size();
  const std::size_t m = m_;
  Occurrences occ;
  if (m > n) return occ;

  std::size_t j = m - 1;
  while (j < n) {
    // q-gram head: the last q characters of the window at once.
    std::uint64_t state = masks_[text[j]] << (q_ - 1);
    for (unsigned l = 1; l < q_; ++l) state &= masks_[text[j - l]] << (q_ - 1 - l);
    state &= keep_;
    if (state == 0) {
      j += m - q_ + 1;
      continue;
    }

    std::size_t read = q_;
    while (read < m) {
      state = (state << 1) & masks_[text[j - read]] & keep_;
      ++read;
      if (state == 0) break;
    }
    if (state != 0) {
      occ.push_back(j + 1 - m);
      j += 1;
    } else {
      // No factor of p equals t[j-read+1 .. j], so no occurrence starts at or
      // before j-read+1 and still covers j.
      j += m - read + 1;
    }
  }
  return occ;
}

}  // namespace epsm
