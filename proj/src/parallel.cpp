#include "zekit/parallel.hpp"

#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace zekit {

int configure_threads_from_env() {
#if defined(_OPENMP)
  if (const char* env = std::getenv("ZEKIT_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace zekit
