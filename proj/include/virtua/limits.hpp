#pragma once

#include <cstddef>

namespace virtua {

// Process-wide resource caps. Groebner blowup is real; these make the engine
// refuse loudly (ResourceLimitError, CLI exit 3) instead of stalling.
struct ComputeLimits {
    int max_vars = 12;             // ring variables (auxiliary t excluded)
    int max_matrix_dim = 12;       // rows/cols accepted by minor expansion
    std::size_t max_pair_queue = 2'000'000;
    double max_seconds = 0;        // wall clock for one compute window; 0 = off
};

ComputeLimits& compute_limits();

// stamp the start of a wall-clock window (called per CLI invocation)
void begin_compute_window();
// throws ResourceLimitError when the pair queue or the clock exceeds the caps
void check_compute_budget(std::size_t pair_queue_size = 0);

}  // namespace virtua
