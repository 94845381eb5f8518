// Isomorphism search over the image of edge 1. The serial path is the reference;
// the OpenMP path evaluates all targets and keeps the least successful one.

#include <vector>

#include "dessinkit/dessin.hpp"

namespace dessinkit {

std::optional<Permutation> dessins_isomorphic(const Dessin& d1, const Dessin& d2, ExecPolicy policy) {
  const std::size_t n = d1.degree();
  if (d2.degree() != n) return std::nullopt;

  if (policy == ExecPolicy::Serial) {
    for (Point t = 1; t <= n; ++t) {
      if (auto pi = isomorphism_from(d1, d2, t)) return pi;
    }
    return std::nullopt;
  }

  std::vector<std::optional<Permutation>> found(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    found[static_cast<std::size_t>(t)] = isomorphism_from(d1, d2, static_cast<Point>(t + 1));
  }
  for (auto& pi : found) {
    if (pi) return std::move(pi);
  }
  return std::nullopt;
}

}  // namespace dessinkit
