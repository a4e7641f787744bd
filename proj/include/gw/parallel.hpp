#pragma once

#ifdef GW_HAS_OPENMP
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
#endif

namespace gw {

/// Kernels with a data-parallel loop take this; `serial` is the reference path.
enum class Exec { serial, parallel };

}  // namespace gw
