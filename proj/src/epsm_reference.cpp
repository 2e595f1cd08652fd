#include "detail.hpp"
#include "kernels.hpp"
#include "ops_reference.hpp"

namespace epsm::detail {

namespace {

template <class Run>
Occurrences with_probe(SearchProbe* probe, Run&& run) {
  if (probe != nullptr) return run(*probe);
  NullProbe none;
  return run(none);
}

}  // namespace

Occurrences epsm_a_reference(const Pattern& p, const Text& t, SearchProbe* probe) {
  return with_probe(probe, [&](auto& pr) { return epsm_a_kernel<ReferenceOps>(p, t, pr); });
}

Occurrences epsm_b_reference(const Pattern& p, const Text& t, SearchProbe* probe) {
  return with_probe(probe, [&](auto& pr) { return epsm_b_kernel<ReferenceOps>(p, t, pr); });
}

Occurrences epsm_c_reference(const Pattern& p, const Text& t, const FingerprintTable& table, SearchProbe* probe) {
  return with_probe(probe, [&](auto& pr) { return epsm_c_kernel<ReferenceOps>(p, t, table, pr); });
}

std::uint32_t crc_block_reference(const std::uint8_t* block) { return ReferenceOps::crc(ReferenceOps::load(block)); }

}  // namespace epsm::detail
