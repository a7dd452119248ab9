#pragma once

// Thin wrappers so kernels compile with or without OpenMP.
#define FLAGCOH_STR(s) #s
#ifdef _OPENMP
#include <omp.h>
#define FLAGCOH_PARALLEL_FOR _Pragma(FLAGCOH_STR(omp parallel for schedule(dynamic)))
#else
#define FLAGCOH_PARALLEL_FOR
#endif

namespace flagcoh {

// Selects between the OpenMP kernel and its serial reference.
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace flagcoh
