#pragma once

namespace dessinkit {

// Selects between the OpenMP kernel and its serial reference. Both produce
// identical results; Serial exists for testing and benchmarking.
enum class ExecPolicy { Serial, Parallel };

// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads() noexcept;

}  // namespace dessinkit
