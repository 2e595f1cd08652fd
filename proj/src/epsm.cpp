#include "epsm/epsm.hpp"

#include <algorithm>

#include "detail.hpp"

namespace epsm {

namespace detail {

[[noreturn]] void throw_simd_unavailable() { throw UsageError("SIMD backend unavailable"); }

}  // namespace detail

namespace {

Backend checked(Backend backend) {
  if (backend == Backend::simd && !simd_available()) detail::throw_simd_unavailable();
  return backend;
}

void require_filter_length(const Pattern& p) {
  if (p.size() < 4) throw UsageError("epsm_b needs m >= 4");
}

void require_fingerprint_length(std::size_t m) {
  if (m < 2 * kAlpha) throw UsageError("epsm_c needs m >= 2 * alpha (32)");
}

}  // namespace

const char* to_string(Kernel k) {
  switch (k) {
    case Kernel::a: return "epsm_a";
    case Kernel::b: return "epsm_b";
    case Kernel::c: return "epsm_c";
  }
  return "?";
}

Kernel select_kernel(std::size_t m, DispatchThresholds thresholds) {
  if (m == 0) throw UsageError("pattern must not be empty");
  if (m < thresholds.b_from) return Kernel::a;
  if (m < thresholds.c_from) return Kernel::b;
  return Kernel::c;
}

BroadcastTable::BroadcastTable(const Pattern& p) {
  const std::size_t mp = std::min(p.size(), kAlpha / 2);
  words_.reserve(mp);
  for (std::size_t i = 0; i < mp; ++i) words_.push_back(reference::broadcast(WordConfig::sse(), p[i]));
}

FingerprintTable::FingerprintTable(const Pattern& p, unsigned bits, Backend backend)
    : bits_(bits), mask_(bits >= 32 ? 0xFFFFFFFFu : (std::uint32_t{1} << bits) - 1) {
  const std::size_t m = p.size();
  require_fingerprint_length(m);
  if (bits < 1 || bits > 32) throw UsageError("fingerprint bits must be in [1, 32]");

  auto crc = checked(backend) == Backend::simd ? &detail::crc_block_simd : &detail::crc_block_reference;

  const std::size_t count = m - kAlpha + 1;
  std::vector<std::uint32_t> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = crc(p.data() + i) & mask_;

  offsets_.resize(count);
  if (bits <= kDenseFingerprintBits) {
    // Counting sort into a CSR layout.
    dense_begin_.assign((std::size_t{1} << bits) + 1, 0);
    for (std::uint32_t v : values) ++dense_begin_[v + 1];
    for (std::size_t v = 1; v < dense_begin_.size(); ++v) dense_begin_[v] += dense_begin_[v - 1];
    std::vector<std::uint32_t> fill(dense_begin_.begin(), dense_begin_.end() - 1);
    for (std::size_t i = 0; i < count; ++i) offsets_[fill[values[i]]++] = static_cast<std::uint32_t>(i);
    return;
  }

  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
  sparse_keys_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    sparse_keys_[i] = values[order[i]];
    offsets_[i] = static_cast<std::uint32_t>(order[i]);
  }
}

std::span<const std::uint32_t> FingerprintTable::sparse_bucket(std::uint32_t v) const {
  const auto [lo, hi] = std::equal_range(sparse_keys_.begin(), sparse_keys_.end(), v);
  return std::span<const std::uint32_t>(offsets_).subspan(static_cast<std::size_t>(lo - sparse_keys_.begin()),
                                                          static_cast<std::size_t>(hi - lo));
}

ScanPlan ScanPlan::for_length(std::size_t m) {
  require_fingerprint_length(m);
  return ScanPlan{(m / kAlpha - 1) * kAlpha};
}

Occurrences epsm_a(const Pattern& p, const Text& t, Backend backend, SearchProbe* probe) {
  return checked(backend) == Backend::simd ? detail::epsm_a_simd(p, t, probe) : detail::epsm_a_reference(p, t, probe);
}

Occurrences epsm_b(const Pattern& p, const Text& t, Backend backend, SearchProbe* probe) {
  require_filter_length(p);
  return checked(backend) == Backend::simd ? detail::epsm_b_simd(p, t, probe) : detail::epsm_b_reference(p, t, probe);
}

Occurrences epsm_c(const Pattern& p, const Text& t, unsigned bits, Backend backend, SearchProbe* probe) {
  require_fingerprint_length(p.size());
  if (p.size() > t.size()) {
    if (bits < 1 || bits > 32) throw UsageError("fingerprint bits must be in [1, 32]");
    return {};
  }
  const FingerprintTable table(p, bits, backend);
  return backend == Backend::simd ? detail::epsm_c_simd(p, t, table, probe)
                                  : detail::epsm_c_reference(p, t, table, probe);
}

Occurrences search(const Pattern& p, const Text& t, Backend backend, SearchProbe* probe) {
  switch (select_kernel(p.size())) {
    case Kernel::a: return epsm_a(p, t, backend, probe);
    case Kernel::b: return epsm_b(p, t, backend, probe);
    case Kernel::c: return epsm_c(p, t, kDefaultFingerprintBits, backend, probe);
  }
  return {};
}

}  // namespace epsm
