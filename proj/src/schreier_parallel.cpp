// OpenMP sifting kernel for Schreier-Sims. The serial reference is
// StabilizerChain::first_failing_serial; both return the same first failure.

#include <algorithm>
#include <utility>

#include "dessinkit/error.hpp"
#include "schreier_sims.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dessinkit {

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace dessinkit

namespace dessinkit::detail {

std::optional<FailingGenerator> StabilizerChain::first_failing_parallel(std::size_t level_idx) {
  Level& level = levels_[level_idx];
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending;
  for (std::size_t oi = 0; oi < level.orbit.size(); ++oi) {
    for (std::size_t gi = 0; gi < level.gens.size(); ++gi) {
      if (!level.checked[oi][gi]) {
        pending.emplace_back(static_cast<std::uint32_t>(oi), static_cast<std::uint32_t>(gi));
      }
    }
  }
  const std::size_t chunk = std::max<std::size_t>(64, 32 * static_cast<std::size_t>(max_threads()));
  std::vector<StripResult> results;
  std::vector<std::uint8_t> passed;

  for (std::size_t start = 0; start < pending.size(); start += chunk) {
    if (cancel_.stop_requested()) fail(ErrorCode::Cancelled, "group computation cancelled");
    const std::size_t len = std::min(chunk, pending.size() - start);
    results.assign(len, StripResult{});
    passed.assign(len, 0);
    const auto count = static_cast<std::ptrdiff_t>(len);

#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      const auto [oi, gi] = pending[start + static_cast<std::size_t>(k)];
      auto r = strip(schreier_generator(level_idx, oi, gi), level_idx + 1);
      passed[static_cast<std::size_t>(k)] = r.dropout == levels_.size() && is_identity(r.residue);
      results[static_cast<std::size_t>(k)] = std::move(r);
    }

    // Every pass is a proven member of the deeper group, so it may be marked even
    // when it lies after the first failure.
    std::optional<std::size_t> first_fail;
    for (std::size_t k = 0; k < len; ++k) {
      const auto [oi, gi] = pending[start + k];
      if (passed[k]) {
        level.checked[oi][gi] = 1;
      } else if (!first_fail) {
        first_fail = k;
      }
    }
    if (first_fail) {
      const auto [oi, gi] = pending[start + *first_fail];
      return FailingGenerator{oi, gi, std::move(results[*first_fail])};
    }
  }
  return std::nullopt;
}

}  // namespace dessinkit::detail
