#pragma once

#include <cstddef>

namespace singideal {

/// Selects between the OpenMP kernel and its plain serial loop. Both paths
/// produce identical results; the serial one exists for testing and
/// benchmarking.
enum class Exec { serial, parallel };

/// Below this many inner-loop work items the parallel kernels stay serial.
inline constexpr std::size_t parallel_grain = 256;

int worker_count() noexcept;

}  // namespace singideal
