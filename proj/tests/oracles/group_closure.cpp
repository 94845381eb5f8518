#include <set>

#include "oracles/oracles.hpp"

namespace oracle {

Images compose(const Images& a, const Images& b) {
  Images out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

namespace {

std::optional<std::set<Images>> closure(const std::vector<Images>& gens, std::size_t limit) {
  if (gens.empty()) return std::set<Images>{};
  Images id(gens.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        Images h = compose(e, g);
        if (seen.insert(h).second) {
          if (seen.size() > limit) return std::nullopt;
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

std::optional<std::size_t> closure_size(const std::vector<Images>& gens, std::size_t limit) {
  auto c = closure(gens, limit);
  if (!c) return std::nullopt;
  return gens.empty() ? 1 : c->size();
}

bool closure_contains(const std::vector<Images>& gens, const Images& target, std::size_t limit) {
  auto c = closure(gens, limit);
  return c && c->count(target) > 0;
}

}  // namespace oracle
