#include "virtua/limits.hpp"

#include <chrono>
#include <string>

#include "virtua/errors.hpp"

namespace virtua {

namespace {
using Clock = std::chrono::steady_clock;
Clock::time_point g_window_start = Clock::now();
}  // namespace

ComputeLimits& compute_limits() {
    static ComputeLimits limits;
    return limits;
}

void begin_compute_window() { g_window_start = Clock::now(); }

void check_compute_budget(std::size_t pair_queue_size) {
    const ComputeLimits& lim = compute_limits();
    if (pair_queue_size > lim.max_pair_queue)
        throw ResourceLimitError("pair queue exceeded cap of " +
                                 std::to_string(lim.max_pair_queue));
    if (lim.max_seconds > 0) {
        double elapsed = std::chrono::duration<double>(Clock::now() - g_window_start).count();
        if (elapsed > lim.max_seconds)
            throw ResourceLimitError("wall-clock budget of " +
                                     std::to_string(lim.max_seconds) + "s exceeded");
    }
}

}  // namespace virtua
