#include "virtua/fitting.hpp"

namespace virtua {

Ideal fitting_ideal(int j, const Presentation& P, ExecMode mode) {
    if (j < 0) throw PreconditionError("Fitting index must be nonnegative");
    return minors_ideal(P.matrix.target().rank() - j, P.matrix, mode);
}

Ideal saturated_fitting(int j, const Presentation& P, const IrrelevantIdeal& B,
                        ExecMode mode) {
    return saturate_by_irrelevant(fitting_ideal(j, P, mode), B);
}

std::vector<FittingLadderEntry> fitting_ladder(const Presentation& P,
                                               const IrrelevantIdeal& B, int jmax) {
    std::vector<FittingLadderEntry> ladder;
    for (int j = 0; j <= jmax; ++j) {
        Ideal f = fitting_ideal(j, P);
        Ideal s = saturate_by_irrelevant(f, B);
        ladder.push_back(FittingLadderEntry{j, std::move(f), std::move(s)});
    }
    return ladder;
}

bool satinv_compare(const Presentation& P, const Presentation& Q,
                    const IrrelevantIdeal& B, int jmax) {
    check_same_ring(P.matrix.ring(), Q.matrix.ring());
    for (int j = 0; j <= jmax; ++j)
        if (!(saturated_fitting(j, P, B) == saturated_fitting(j, Q, B))) return false;
    return true;
}

std::optional<int> is_locally_free_rank(const Presentation& P, const IrrelevantIdeal& B) {
    const int rt = P.matrix.target().rank();
    // Fitt_{-1} = I_{rt+1} = <0>, so the r = 0 case reads uniformly
    Ideal below = saturate_by_irrelevant(minors_ideal(rt + 1, P.matrix), B);
    for (int r = 0; r <= rt; ++r) {
        Ideal at = saturated_fitting(r, P, B);
        if (at.is_unit() && below.is_zero()) return r;
        below = std::move(at);
    }
    return std::nullopt;
}

bool generation_obstruction(const Presentation& P, int j, const Ideal& Q,
                            const IrrelevantIdeal& B, bool* not_saturated) {
    check_same_ring(P.matrix.ring(), Q.ring());
    if (not_saturated) *not_saturated = false;
    if (!(saturate_by_irrelevant(Q, B) == Q)) {
        if (not_saturated) *not_saturated = true;
        return false;
    }
    Ideal satj = saturated_fitting(j, P, B);
    return Q.contains(satj);
}

}  // namespace virtua
