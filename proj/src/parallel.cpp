#include "equicat/parallel.hpp"

namespace equicat::par {

ExecPolicy& exec_policy() {
  static ExecPolicy policy;
  return policy;
}

void set_parallel(bool on) { exec_policy().parallel = on; }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace equicat::par
