#pragma once

#include <cstddef>

namespace zekit {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both paths produce bitwise-identical results.
enum class Exec { serial, parallel };

/// Applies the ZEKIT_THREADS cap (if set) to the OpenMP runtime. Returns the
/// resulting maximum thread count.
int configure_threads_from_env();

int max_threads();

}  // namespace zekit
