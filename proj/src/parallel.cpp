#include "singideal/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace singideal {

int worker_count() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace singideal
