#pragma once

#include <functional>

namespace snum::parallel {

enum class Mode { serial, openmp };

// Process-wide execution mode. Default comes from SNUM_THREADS:
// unset/0 -> openmp with the runtime's thread count, 1 -> serial,
// k > 1 -> openmp with k threads.
Mode mode();
void set_mode(Mode m);
void set_threads(int n);  // 0 = runtime default
int thread_count();
void init_from_env();

// Index-parallel loop. Bodies must only write to their own slot of a
// pre-sized output; reductions happen serially afterwards so results are
// identical in both modes.
void for_index(int n, const std::function<void(int)>& body);
void for_index(int n, const std::function<void(int)>& body, Mode m);

}  // namespace snum::parallel
