#pragma once

#include <optional>

#include "virtua/freemod.hpp"

namespace virtua {

// Fitt_j(M) = I_{r-j}(matrix) for a presentation with target rank r.
Ideal fitting_ideal(int j, const Presentation& P, ExecMode mode = default_exec_mode());

// Fitt_j(M) : B^infinity
Ideal saturated_fitting(int j, const Presentation& P, const IrrelevantIdeal& B,
                        ExecMode mode = default_exec_mode());

struct FittingLadderEntry {
    int j;
    Ideal fitt;
    Ideal saturated;
};

// entries for j = 0..jmax
std::vector<FittingLadderEntry> fitting_ladder(const Presentation& P,
                                               const IrrelevantIdeal& B, int jmax);

// saturated Fitting ideals agree for all j <= jmax (canonical GB equality);
// meaningful when the cokernels have isomorphic sheaves
bool satinv_compare(const Presentation& P, const Presentation& Q,
                    const IrrelevantIdeal& B, int jmax);

// the unique r with Fitt_r : B^inf = S and Fitt_{r-1} : B^inf = 0, if any;
// detects sheaves that are locally free of constant rank
std::optional<int> is_locally_free_rank(const Presentation& P, const IrrelevantIdeal& B);

// Q lies in V(Fitt_j(M) : B^inf): Q is B-saturated and contains the saturated
// Fitting ideal, obstructing generation by j elements at Q up to saturation.
// A non-saturated Q reports false and sets *not_saturated when provided.
bool generation_obstruction(const Presentation& P, int j, const Ideal& Q,
                            const IrrelevantIdeal& B, bool* not_saturated = nullptr);

}  // namespace virtua
