#pragma once

#include <memory>
#include <vector>

#include "dessinkit/caps.hpp"
#include "dessinkit/parallel.hpp"
#include "dessinkit/perm.hpp"

namespace dessinkit {

namespace detail {
class StabilizerChain;
}

// A permutation group given by generators. The base and strong generating set is
// built deterministically (Schreier-Sims, base points chosen as the least moved
// point) on first use and is read-only afterwards; copies share it.
class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> generators, Caps caps = {},
                     ExecPolicy policy = ExecPolicy::Parallel, CancelToken cancel = {});

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;

  // Orbit of `point` (1-based), in discovery order.
  std::vector<Point> orbit(Point point) const;
  bool is_transitive() const;

  // These build the stabilizer chain if needed. ResourceLimit / Cancelled may be thrown.
  const Integer& order() const;
  bool contains(const Permutation& a) const;
  std::vector<Point> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;
  std::vector<Permutation> strong_generators() const;

  struct State;

 private:
  const detail::StabilizerChain& chain() const;
  std::shared_ptr<State> state_;
};

Integer group_order(const PermGroup& g);
bool is_member(const PermGroup& g, const Permutation& a);
bool is_transitive(const PermGroup& g);

}  // namespace dessinkit
