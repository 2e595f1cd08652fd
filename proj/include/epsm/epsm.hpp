#pragma once

// Exact packed string matching over aligned 16-byte text blocks.
//
//   epsm_a  broadcast-compare filter, any m (tuned for m < 4)
//   epsm_b  4-byte SAD prefix filter plus half-block blend, m >= 4
//   epsm_c  CRC-32C block fingerprints, m >= 32
//   search  picks one of the three by pattern length
//
// All kernels return exactly the naive occurrence set. Overlapping
// occurrences are all reported.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "epsm/packed_word.hpp"
#include "epsm/text.hpp"

namespace epsm {

inline constexpr std::size_t kAlpha = kBlockSize;
inline constexpr unsigned kDefaultFingerprintBits = 11;

enum class Kernel { a, b, c };

const char* to_string(Kernel k);

struct DispatchThresholds {
  std::size_t b_from = 4;           // m < b_from runs epsm_a
  std::size_t c_from = 2 * kAlpha;  // m >= c_from runs epsm_c
};

Kernel select_kernel(std::size_t m, DispatchThresholds thresholds = {});

// m' = min(m, alpha/2) words, entry i = broadcast(p[i]).
class BroadcastTable {
 public:
  explicit BroadcastTable(const Pattern& p);

  std::size_t size() const { return words_.size(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }

 private:
  std::vector<Word> words_;
};

// Pattern offsets i in [0, m - alpha] bucketed by wscrc(p[i .. i+alpha-1])
// masked to its low `bits` bits. Immutable after construction.
//
// Up to kDenseFingerprintBits the buckets are a dense 2^bits index; above it
// the (value, offset) pairs are kept sorted and looked up by binary search.
class FingerprintTable {
 public:
  static constexpr unsigned kDenseFingerprintBits = 20;

  // Throws UsageError unless m >= 2 * alpha and 1 <= bits <= 32.
  FingerprintTable(const Pattern& p, unsigned bits = kDefaultFingerprintBits,
                   Backend backend = default_backend());

  unsigned bits() const { return bits_; }
  std::uint32_t mask() const { return mask_; }
  std::uint64_t bucket_count() const { return std::uint64_t{1} << bits_; }
  std::size_t size() const { return offsets_.size(); }

  // Offsets whose masked fingerprint is v, ascending.
  std::span<const std::uint32_t> bucket(std::uint32_t v) const {
    if (!dense_begin_.empty()) {
      return std::span<const std::uint32_t>(offsets_).subspan(dense_begin_[v], dense_begin_[v + 1] - dense_begin_[v]);
    }
    return sparse_bucket(v);
  }

 private:
  std::span<const std::uint32_t> sparse_bucket(std::uint32_t v) const;

  unsigned bits_;
  std::uint32_t mask_;
  std::vector<std::uint32_t> dense_begin_;  // 2^bits + 1 entries, dense mode only
  std::vector<std::uint32_t> sparse_keys_;  // parallel to offsets_, sparse mode only
  std::vector<std::uint32_t> offsets_;
};

// Distance between inspected aligned blocks in epsm_c.
struct ScanPlan {
  std::size_t step;

  // step = (floor(m / alpha) - 1) * alpha; throws UsageError for m < 2 * alpha.
  static ScanPlan for_length(std::size_t m);
};

// Observer for instrumented runs. Kernels call block_read for every aligned
// block load (byte offset of the block) and candidate for every position
// produced by a filter before verification.
class SearchProbe {
 public:
  virtual ~SearchProbe() = default;
  virtual void block_read(std::size_t offset) = 0;
  virtual void candidate(std::size_t position) = 0;
};

Occurrences epsm_a(const Pattern& p, const Text& t, Backend backend = default_backend(),
                   SearchProbe* probe = nullptr);

// Throws UsageError for m < 4.
Occurrences epsm_b(const Pattern& p, const Text& t, Backend backend = default_backend(),
                   SearchProbe* probe = nullptr);

// Throws UsageError for m < 2 * alpha or bits outside [1, 32].
Occurrences epsm_c(const Pattern& p, const Text& t, unsigned bits = kDefaultFingerprintBits,
                   Backend backend = default_backend(), SearchProbe* probe = nullptr);

Occurrences search(const Pattern& p, const Text& t, Backend backend = default_backend(),
                   SearchProbe* probe = nullptr);

}  // namespace epsm
