#include "dessinkit/perm_group.hpp"

#include <mutex>

#include "dessinkit/error.hpp"
#include "schreier_sims.hpp"

namespace dessinkit {

struct PermGroup::State {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  Caps caps;
  ExecPolicy policy = ExecPolicy::Parallel;
  CancelToken cancel;
  std::once_flag once;
  std::unique_ptr<detail::StabilizerChain> chain;
};

PermGroup::PermGroup(std::vector<Permutation> generators, Caps caps, ExecPolicy policy,
                     CancelToken cancel)
    : state_(std::make_shared<State>()) {
  if (generators.empty()) fail(ErrorCode::OutOfRange, "a group needs at least one generator");
  const std::size_t n = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n) {
      fail(ErrorCode::DegreeMismatch,
           "generator degrees " + std::to_string(n) + " and " + std::to_string(g.degree()));
    }
  }
  state_->degree = n;
  state_->generators = std::move(generators);
  state_->caps = std::move(caps);
  state_->policy = policy;
  state_->cancel = std::move(cancel);
}

std::size_t PermGroup::degree() const noexcept { return state_->degree; }

const std::vector<Permutation>& PermGroup::generators() const noexcept { return state_->generators; }

const detail::StabilizerChain& PermGroup::chain() const {
  // call_once leaves the flag unset when the builder throws, so a later call retries.
  std::call_once(state_->once, [this] {
    std::vector<detail::Images> gens;
    for (const auto& g : state_->generators) {
      gens.emplace_back(g.images0().begin(), g.images0().end());
    }
    state_->chain = std::make_unique<detail::StabilizerChain>(
        state_->degree, std::move(gens), state_->caps, state_->policy, state_->cancel);
  });
  return *state_->chain;
}

std::vector<Point> PermGroup::orbit(Point point) const {
  const std::size_t n = degree();
  if (point < 1 || point > n) {
    fail(ErrorCode::PointOutOfRange, "point " + std::to_string(point) + " outside 1.." + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  std::vector<Point> out{point - 1};
  seen[point - 1] = true;
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    for (const auto& g : state_->generators) {
      Point next = g.images0()[out[pos]];
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  }
  for (auto& p : out) ++p;
  return out;
}

bool PermGroup::is_transitive() const { return orbit(1).size() == degree(); }

const Integer& PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation& a) const {
  if (a.degree() != degree()) {
    fail(ErrorCode::DegreeMismatch,
         "degrees " + std::to_string(a.degree()) + " and " + std::to_string(degree()));
  }
  return chain().contains(detail::Images(a.images0().begin(), a.images0().end()));
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& level : chain().levels()) out.push_back(level.base_point + 1);
  return out;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : chain().levels()) out.push_back(level.orbit.size());
  return out;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : chain().levels()) {
    for (const auto& g : level.gens) {
      auto p = Permutation::from_images0(g);
      bool seen = false;
      for (const auto& q : out) seen = seen || q == p;
      if (!seen) out.push_back(std::move(p));
    }
  }
  return out;
}

Integer group_order(const PermGroup& g) { return g.order(); }

bool is_member(const PermGroup& g, const Permutation& a) { return g.contains(a); }

bool is_transitive(const PermGroup& g) { return g.is_transitive(); }

}  // namespace dessinkit
