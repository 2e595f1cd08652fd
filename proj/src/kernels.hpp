#pragma once

// EPSM kernels, generic over a packed-instruction policy `Ops` with
//
//   Block                      one 16-character word
//   load(const uint8_t*)       aligned block load
//   load_prefix(p, k)          first k <= 16 bytes of p, zero filled
//   broadcast(c)
//   cmp(a, b)     -> uint32_t  wscmp mask
//   filter4(a, b) -> uint32_t  4-character SAD prefix match, bits 0..7
//   blend(a, b)   -> Block     a[8..15] b[0..7]
//   crc(a)        -> uint32_t  CRC-32C of the 16 bytes from 0
//
// and a probe type with block_read(offset) and candidate(position).

#include <algorithm>
#include <array>
#include <cstring>
#include <utility>

#include "epsm/epsm.hpp"

namespace epsm::detail {

struct NullProbe {
  void block_read(std::size_t) {}
  void candidate(std::size_t) {}
};

inline bool matches_at(const std::uint8_t* text, std::size_t n, const Pattern& p, std::size_t s) {
  const std::size_t m = p.size();
  if (s > n || m > n - s) return false;
  return text[s] == p[0] && std::memcmp(text + s, p.data(), m) == 0;
}

template <class Ops, class Probe>
Occurrences epsm_a_kernel(const Pattern& p, const Text& t, Probe& probe) {
  const std::size_t m = p.size();
  const std::size_t n = t.size();
  Occurrences occ;
  if (m > n) return occ;

  const std::size_t mp = std::min(m, kAlpha / 2);
  const auto bcast = [&]<std::size_t... J>(std::index_sequence<J...>) {
    return std::array<typename Ops::Block, sizeof...(J)>{Ops::broadcast(J < mp ? p[J] : 0)...};
  }(std::make_index_sequence<kAlpha / 2>{});

  const std::uint8_t* text = t.data();
  const std::size_t blocks = t.full_blocks();
  for (std::size_t i = 0; i < blocks; ++i) {
    const std::size_t base = i * kAlpha;
    probe.block_read(base);
    const auto block = Ops::load(text + base);

    // s_j shifted toward lower offsets by j: bit o survives iff
    // block[o + j] == p[j] for every j < m'.
    std::uint32_t r = 0xFFFFu;
    for (std::size_t j = 0; j < mp; ++j) r &= Ops::cmp(block, bcast[j]) >> j;

    if (m == mp) {
      for_each_set_bit(r, [&](unsigned o) {
        probe.candidate(base + o);
        occ.push_back(base + o);
      });
    } else {
      for_each_set_bit(r, [&](unsigned o) {
        probe.candidate(base + o);
        if (matches_at(text, n, p, base + o)) occ.push_back(base + o);
      });
    }

    // Starts whose m'-prefix crosses into the next block.
    for (std::size_t o = kAlpha - mp + 1; o < kAlpha; ++o) {
      if (matches_at(text, n, p, base + o)) occ.push_back(base + o);
    }
  }

  for (std::size_t s = blocks * kAlpha; s + m <= n; ++s) {
    if (matches_at(text, n, p, s)) occ.push_back(s);
  }
  return occ;
}

template <class Ops, class Probe>
Occurrences epsm_b_kernel(const Pattern& p, const Text& t, Probe& probe) {
  const std::size_t m = p.size();
  const std::size_t n = t.size();
  Occurrences occ;
  if (m > n) return occ;

  const auto prefix = Ops::load_prefix(p.data(), std::min(m, kAlpha / 2));
  const std::uint8_t* text = t.data();
  const std::size_t blocks = t.full_blocks();

  auto check = [&](std::size_t s) {
    probe.candidate(s);
    if (matches_at(text, n, p, s)) occ.push_back(s);
  };

  if (blocks > 0) {
    probe.block_read(0);
    auto current = Ops::load(text);
    for (std::size_t i = 0; i < blocks; ++i) {
      const std::size_t base = i * kAlpha;
      for_each_set_bit(Ops::filter4(current, prefix), [&](unsigned o) { check(base + o); });

      // The block after the last full one is the zero-padded remainder.
      probe.block_read(base + kAlpha);
      const auto next = Ops::load(text + base + kAlpha);
      const auto shifted = Ops::blend(current, next);
      for_each_set_bit(Ops::filter4(shifted, prefix), [&](unsigned o) { check(base + kAlpha / 2 + o); });
      current = next;
    }
  }

  for (std::size_t s = blocks * kAlpha; s + m <= n; ++s) {
    if (matches_at(text, n, p, s)) occ.push_back(s);
  }
  return occ;
}

template <class Ops, class Probe>
Occurrences epsm_c_kernel(const Pattern& p, const Text& t, const FingerprintTable& table, Probe& probe) {
  const std::size_t m = p.size();
  const std::size_t n = t.size();
  Occurrences occ;
  if (m > n) return occ;

  const std::size_t step = ScanPlan::for_length(m).step;
  const std::uint32_t mask = table.mask();
  const std::uint8_t* text = t.data();

  bool sorted = true;
  for (std::size_t c = 0; c + kAlpha <= n; c += step) {
    probe.block_read(c);
    const std::uint32_t v = Ops::crc(Ops::load(text + c)) & mask;
    for (std::uint32_t j : table.bucket(v)) {
      if (j > c || c - j > n - m) continue;
      const std::size_t s = c - j;
      probe.candidate(s);
      if (matches_at(text, n, p, s)) {
        if (!occ.empty() && s <= occ.back()) sorted = false;
        occ.push_back(s);
      }
    }
  }

  if (!sorted) {
    std::sort(occ.begin(), occ.end());
    occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
  }
  return occ;
}

}  // namespace epsm::detail
