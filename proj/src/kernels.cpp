#include "virtua/kernels.hpp"

#include <atomic>
#include <exception>

#include "virtua/groebner.hpp"

#ifdef VIRTUA_HAVE_OPENMP
#include <omp.h>
#endif

namespace virtua {

namespace {
ExecMode g_mode =
#ifdef VIRTUA_HAVE_OPENMP
    ExecMode::Parallel;
#else
    ExecMode::Serial;
#endif
}  // namespace

ExecMode default_exec_mode() { return g_mode; }
void set_default_exec_mode(ExecMode mode) { g_mode = mode; }

int kernel_thread_count() {
#ifdef VIRTUA_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

// run f(i) for i in [0, n) in the requested mode; first exception wins and is
// rethrown after the loop joins
template <typename F>
void for_each_index(std::size_t n, ExecMode mode, F&& f) {
#ifdef VIRTUA_HAVE_OPENMP
    if (mode == ExecMode::Parallel && n > 1) {
        std::exception_ptr err = nullptr;
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                f(static_cast<std::size_t>(i));
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace

std::vector<Poly> normal_form_batch(std::span<const Poly> batch,
                                    std::span<const Poly> basis,
                                    const MonomialOrder& ord, ExecMode mode) {
    std::vector<Poly> out(batch.size());
    for_each_index(batch.size(), mode,
                   [&](std::size_t i) { out[i] = reduce_full(batch[i], basis, ord); });
    return out;
}

Poly submatrix_det(const std::vector<std::vector<Poly>>& entries,
                   std::span<const int> rows, std::span<const int> cols,
                   const MonomialOrder& ord) {
    const int r = static_cast<int>(rows.size());
    if (r == 0 || rows.size() != cols.size())
        throw Error("submatrix_det: bad row/col selection");
    const Poly* sample = nullptr;
    for (int b = 0; b < r && !sample; ++b)
        for (int k = 0; k < r && !sample; ++k)
            if (!entries[rows[b]][cols[k]].is_zero()) sample = &entries[rows[b]][cols[k]];
    if (!sample) return Poly{};
    // dp[mask] = det of (rows in mask) x (first popcount(mask) columns)
    std::vector<Poly> dp(std::size_t(1) << r);
    dp[0] = Poly::constant(sample->nvars(), Scalar::one(sample->lead().coef.modulus()));
    for (int mask = 1; mask < (1 << r); ++mask) {
        int k = __builtin_popcount(static_cast<unsigned>(mask));
        const int col = cols[k - 1];
        Poly acc;
        int pos = 0;
        for (int b = 0; b < r; ++b) {
            if (!(mask & (1 << b))) continue;
            const Poly& e = entries[rows[b]][col];
            if (!e.is_zero() && !dp[mask ^ (1 << b)].is_zero()) {
                Poly contrib = mul(e, dp[mask ^ (1 << b)], ord);
                bool negative = ((pos + (k - 1)) % 2) != 0;
                acc = add(acc, negative ? negated(contrib) : contrib, ord);
            }
            ++pos;
        }
        dp[mask] = std::move(acc);
    }
    return dp[(std::size_t(1) << r) - 1];
}

std::vector<Poly> minor_batch(const std::vector<std::vector<Poly>>& entries,
                              const std::vector<MinorSpec>& specs,
                              const MonomialOrder& ord, ExecMode mode) {
    std::vector<Poly> out(specs.size());
    for_each_index(specs.size(), mode, [&](std::size_t i) {
        out[i] = submatrix_det(entries, specs[i].first, specs[i].second, ord);
    });
    return out;
}

void run_indexed(std::size_t n, ExecMode mode, const std::function<void(std::size_t)>& f) {
    for_each_index(n, mode, [&](std::size_t i) { f(i); });
}

}  // namespace virtua
