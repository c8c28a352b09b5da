#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "virtua/poly.hpp"

namespace virtua {

// Execution mode of the data-parallel kernels. Serial is the reference
// implementation; Parallel runs the same loop under OpenMP. Both produce
// identical results (outputs are written to indexed slots and merged in
// index order), which the kernel tests assert.
enum class ExecMode { Serial, Parallel };

ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode mode);
int kernel_thread_count();

// full normal form of every element of `batch` against a frozen basis
std::vector<Poly> normal_form_batch(std::span<const Poly> batch,
                                    std::span<const Poly> basis,
                                    const MonomialOrder& ord, ExecMode mode);

// determinant of the square submatrix on `rows` x `cols` (strictly increasing
// index lists) by column expansion over row subsets
Poly submatrix_det(const std::vector<std::vector<Poly>>& entries,
                   std::span<const int> rows, std::span<const int> cols,
                   const MonomialOrder& ord);

using MinorSpec = std::pair<std::vector<int>, std::vector<int>>;

// all requested minors of one matrix
std::vector<Poly> minor_batch(const std::vector<std::vector<Poly>>& entries,
                              const std::vector<MinorSpec>& specs,
                              const MonomialOrder& ord, ExecMode mode);

// run f(i) for i in [0, n); Parallel uses OpenMP with results expected in
// indexed slots so both modes agree
void run_indexed(std::size_t n, ExecMode mode, const std::function<void(std::size_t)>& f);

}  // namespace virtua
