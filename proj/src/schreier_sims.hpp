#pragma once

// Internal stabilizer-chain representation shared by PermGroup and the sifting kernels.

#include <cstdint>
#include <optional>
#include <vector>

#include "dessinkit/caps.hpp"
#include "dessinkit/parallel.hpp"
#include "dessinkit/perm.hpp"

namespace dessinkit::detail {

using Images = std::vector<Point>;  // 0-based image table

struct Level {
  Point base_point = 0;
  std::vector<Images> gens;
  std::vector<Point> orbit;            // discovery order
  std::vector<std::int32_t> index_of;  // point -> orbit index, or -1
  std::vector<Images> transversal;     // base_point^u = orbit[idx]
  std::vector<Images> transversal_inv;
  std::vector<std::vector<std::uint8_t>> checked;  // [orbit idx][gen idx]
};

struct StripResult {
  Images residue;
  std::size_t dropout;  // first level whose orbit misses the image, or levels.size()
};

struct FailingGenerator {
  std::size_t orbit_idx;
  std::size_t gen_idx;
  StripResult strip;
};

class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::vector<Images> generators, const Caps& caps,
                  ExecPolicy policy, CancelToken cancel);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const Integer& order() const noexcept { return order_; }

  StripResult strip(Images g, std::size_t from) const;
  bool contains(const Images& g) const;

  // u_beta * s * u_{beta^s}^-1 for the given level and pair.
  Images schreier_generator(std::size_t level, std::size_t orbit_idx, std::size_t gen_idx) const;

  // Marks verified pairs and returns the first (canonical order) Schreier generator at
  // `level` that does not sift through the deeper levels.
  std::optional<FailingGenerator> first_failing_serial(std::size_t level);
  std::optional<FailingGenerator> first_failing_parallel(std::size_t level);

 private:
  void build();
  void add_level(Point base_point);
  void add_generator(std::size_t level, const Images& g);
  void check_limits();

  std::size_t degree_;
  Caps caps_;
  ExecPolicy policy_;
  CancelToken cancel_;
  std::vector<Level> levels_;
  Integer order_ = 1;
  std::size_t transversal_bytes_ = 0;
};

bool is_identity(const Images& g) noexcept;

}  // namespace dessinkit::detail
