#include "schreier_sims.hpp"

#include <numeric>
#include <string>

#include "dessinkit/error.hpp"

namespace dessinkit::detail {

bool is_identity(const Images& g) noexcept {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != i) return false;
  }
  return true;
}

namespace {

Images identity_images(std::size_t n) {
  Images out(n);
  std::iota(out.begin(), out.end(), Point{0});
  return out;
}

bool fixes_all(const Images& g, const std::vector<Level>& levels, std::size_t upto) {
  for (std::size_t l = 0; l < upto; ++l) {
    Point b = levels[l].base_point;
    if (g[b] != b) return false;
  }
  return true;
}

Point least_moved(const Images& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != i) return static_cast<Point>(i);
  }
  fail(ErrorCode::Internal, "least_moved called on the identity");
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::vector<Images> generators,
                                 const Caps& caps, ExecPolicy policy, CancelToken cancel)
    : degree_(degree), caps_(caps), policy_(policy), cancel_(std::move(cancel)) {
  if (degree_ > caps_.max_degree) {
    fail(ErrorCode::ResourceLimit, "degree " + std::to_string(degree_) + " exceeds cap " +
                                       std::to_string(caps_.max_degree));
  }
  std::vector<Images> gens;
  for (auto& g : generators) {
    if (is_identity(g)) continue;
    bool duplicate = false;
    for (const auto& h : gens) duplicate = duplicate || h == g;
    if (!duplicate) gens.push_back(std::move(g));
  }
  if (gens.empty()) return;

  for (const auto& g : gens) {
    if (fixes_all(g, levels_, levels_.size())) add_level(least_moved(g));
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : gens) {
      if (fixes_all(g, levels_, l)) add_generator(l, g);
    }
  }
  build();
}

void StabilizerChain::add_level(Point base_point) {
  Level level;
  level.base_point = base_point;
  level.orbit.push_back(base_point);
  level.index_of.assign(degree_, -1);
  level.index_of[base_point] = 0;
  level.transversal.push_back(identity_images(degree_));
  level.transversal_inv.push_back(identity_images(degree_));
  level.checked.emplace_back();
  levels_.push_back(std::move(level));
  transversal_bytes_ += 2 * degree_ * sizeof(Point);
}

void StabilizerChain::add_generator(std::size_t level_idx, const Images& g) {
  Level& level = levels_[level_idx];
  const std::size_t old_orbit = level.orbit.size();
  level.gens.push_back(g);
  for (auto& row : level.checked) row.push_back(0);
  const std::size_t new_gen = level.gens.size() - 1;

  // Existing transversal entries are kept, so earlier verification marks stay valid.
  for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
    const std::size_t first_gen = pos < old_orbit ? new_gen : 0;
    for (std::size_t gi = first_gen; gi < level.gens.size(); ++gi) {
      const Images& s = level.gens[gi];
      Point image = s[level.orbit[pos]];
      if (level.index_of[image] >= 0) continue;
      const Images& u = level.transversal[pos];
      Images v(degree_);
      for (std::size_t p = 0; p < degree_; ++p) v[p] = s[u[p]];
      Images v_inv(degree_);
      for (std::size_t p = 0; p < degree_; ++p) v_inv[v[p]] = static_cast<Point>(p);
      level.index_of[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      level.transversal.push_back(std::move(v));
      level.transversal_inv.push_back(std::move(v_inv));
      level.checked.emplace_back(level.gens.size(), 0);
      transversal_bytes_ += 2 * degree_ * sizeof(Point);
    }
  }
  check_limits();
}

void StabilizerChain::check_limits() {
  order_ = 1;
  for (const auto& level : levels_) order_ *= static_cast<unsigned long>(level.orbit.size());
  if (transversal_bytes_ > caps_.max_transversal_bytes) {
    fail(ErrorCode::ResourceLimit, "transversal tables exceed " +
                                       std::to_string(caps_.max_transversal_bytes) + " bytes");
  }
  // The running product only grows, so exceeding the cap early is conclusive.
  if (caps_.max_group_order > 0 && order_ > caps_.max_group_order) {
    fail(ErrorCode::ResourceLimit, "group order exceeds cap " + caps_.max_group_order.get_str());
  }
  if (cancel_.stop_requested()) fail(ErrorCode::Cancelled, "group computation cancelled");
}

StripResult StabilizerChain::strip(Images g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const std::int32_t idx = level.index_of[g[level.base_point]];
    if (idx < 0) return {std::move(g), l};
    const Images& inv = level.transversal_inv[static_cast<std::size_t>(idx)];
    for (auto& v : g) v = inv[v];
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Images& g) const {
  auto r = strip(g, 0);
  return r.dropout == levels_.size() && is_identity(r.residue);
}

Images StabilizerChain::schreier_generator(std::size_t level_idx, std::size_t orbit_idx,
                                           std::size_t gen_idx) const {
  const Level& level = levels_[level_idx];
  const Images& u = level.transversal[orbit_idx];
  const Images& s = level.gens[gen_idx];
  const Point gamma = s[level.orbit[orbit_idx]];
  const Images& w_inv = level.transversal_inv[static_cast<std::size_t>(level.index_of[gamma])];
  Images out(degree_);
  for (std::size_t p = 0; p < degree_; ++p) out[p] = w_inv[s[u[p]]];
  return out;
}

void StabilizerChain::build() {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    if (cancel_.stop_requested()) fail(ErrorCode::Cancelled, "group computation cancelled");
    const auto level = static_cast<std::size_t>(i);
    auto failure = policy_ == ExecPolicy::Parallel ? first_failing_parallel(level)
                                                   : first_failing_serial(level);
    if (!failure) {
      --i;
      continue;
    }
    const Images h = std::move(failure->strip.residue);
    const std::size_t j = failure->strip.dropout;
    if (j == levels_.size()) add_level(least_moved(h));
    for (std::size_t l = level + 1; l <= j; ++l) add_generator(l, h);
    i = static_cast<std::ptrdiff_t>(j);
  }
  check_limits();
}

std::optional<FailingGenerator> StabilizerChain::first_failing_serial(std::size_t level_idx) {
  Level& level = levels_[level_idx];
  std::size_t since_check = 0;
  for (std::size_t oi = 0; oi < level.orbit.size(); ++oi) {
    for (std::size_t gi = 0; gi < level.gens.size(); ++gi) {
      if (level.checked[oi][gi]) continue;
      if (++since_check == 4096) {
        since_check = 0;
        if (cancel_.stop_requested()) fail(ErrorCode::Cancelled, "group computation cancelled");
      }
      auto r = strip(schreier_generator(level_idx, oi, gi), level_idx + 1);
      if (r.dropout == levels_.size() && is_identity(r.residue)) {
        level.checked[oi][gi] = 1;
      } else {
        return FailingGenerator{oi, gi, std::move(r)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace dessinkit::detail
