#pragma once

#include <cstddef>
#include <cstdint>
#include <stop_token>
#include <string_view>

#include <gmpxx.h>

namespace dessinkit {

// Resource limits shared by the group, Belyi and CLI layers.
struct Caps {
  // Largest permutation degree accepted by PermGroup.
  std::size_t max_degree = 100000;
  // Upper bound on bytes held by the transversal tables of one BSGS.
  std::size_t max_transversal_bytes = std::size_t{1} << 30;
  // Refuse groups whose order provably exceeds this; 0 disables the check.
  mpz_class max_group_order = 0;
  // Largest m+n allowed for a single B_{m,n} stage in a Belyi chain.
  std::uint64_t max_stage_size = 1000000;
  // Largest degree a chain stage may be expanded to as an explicit polynomial.
  std::uint64_t max_expand_degree = 4096;
  // Largest bit size of an exact value produced by evaluating a symbolic B_{m,n} stage.
  std::uint64_t max_value_bits = std::uint64_t{1} << 27;
};

// Parses "key=value,key=value" (keys: degree, transversal_bytes, group_order,
// stage_size, expand_degree, value_bits) on top of `base`. Throws SyntaxError on bad input.
Caps parse_caps(std::string_view spec, Caps base = {});

// Caps with DESSINKIT_CAPS applied, if that variable is set.
Caps caps_from_env();

// Cooperative cancellation for long-running group computations.
using CancelToken = std::stop_token;

}  // namespace dessinkit
