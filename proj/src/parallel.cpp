#include "snum/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace snum::parallel {

namespace {
Mode g_mode = Mode::openmp;
}

Mode mode() { return g_mode; }
void set_mode(Mode m) { g_mode = m; }

void set_threads(int n) {
    if (n == 1) {
        g_mode = Mode::serial;
        return;
    }
    g_mode = Mode::openmp;
#ifdef _OPENMP
    if (n > 1) omp_set_num_threads(n);
#endif
}

int thread_count() {
    if (g_mode == Mode::serial) return 1;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void init_from_env() {
    if (const char* env = std::getenv("SNUM_THREADS")) {
        set_threads(std::atoi(env));
    }
}

void for_index(int n, const std::function<void(int)>& body) { for_index(n, body, g_mode); }

void for_index(int n, const std::function<void(int)>& body, Mode m) {
    if (m == Mode::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < n; ++i) body(i);
    } else {
        for (int i = 0; i < n; ++i) body(i);
    }
}

}  // namespace snum::parallel
