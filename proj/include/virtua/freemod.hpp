#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "virtua/groebner.hpp"
#include "virtua/modgb.hpp"

namespace virtua {

// randomness for the probabilistic rank pre-pass flows from one session seed
inline constexpr std::uint64_t kDefaultSeed = 1;

// Twisted graded free module ⊕_j S(-a_j); the zero module is the empty list.
struct FreeModule {
    RingPtr ring;
    std::vector<Multidegree> twists;

    int rank() const { return static_cast<int>(twists.size()); }
    bool same_twists(const FreeModule& o) const { return twists == o.twists; }
};

// Map of twisted free modules as a rows x cols polynomial matrix. Entry (i,j)
// is zero or homogeneous of degree source.twists[j] - target.twists[i];
// construction validates this and reports the offending position.
class GradedMatrix {
public:
    GradedMatrix(FreeModule source, FreeModule target,
                 std::vector<std::vector<Poly>> entries);
    static GradedMatrix zero(FreeModule source, FreeModule target);

    const FreeModule& source() const { return source_; }
    const FreeModule& target() const { return target_; }
    const RingPtr& ring() const { return source_.ring; }
    int rows() const { return target_.rank(); }
    int cols() const { return source_.rank(); }
    const Poly& entry(int i, int j) const { return entries_[i][j]; }
    const std::vector<std::vector<Poly>>& entries() const { return entries_; }

    bool is_zero() const;
    bool has_unit_entry() const;
    std::vector<ModPoly> columns_as_modpolys() const;

private:
    FreeModule source_;
    FreeModule target_;
    std::vector<std::vector<Poly>> entries_;
};

// a ∘ b (a's source must match b's target)
GradedMatrix matrix_product(const GradedMatrix& a, const GradedMatrix& b);

// Bounded chain F_0 <- F_1 <- ... <- F_n with maps[i] = phi_{i+1}: F_{i+1} -> F_i.
struct FreeComplex {
    std::vector<FreeModule> modules;
    std::vector<GradedMatrix> maps;

    int length() const { return static_cast<int>(maps.size()); }
    const RingPtr& ring() const { return modules.front().ring; }
};

// module identities, homogeneity, and phi_i phi_{i+1} = 0 with a witness
void validate_complex(const FreeComplex& F);

// right-exact datum F -> G -> M -> 0; M = coker(matrix)
struct Presentation {
    GradedMatrix matrix;
};

// presentation of S/I from the generators of I
Presentation presentation_of_quotient(const Ideal& I);

struct PartialResolutionError : Error {
    FreeComplex prefix;
    explicit PartialResolutionError(FreeComplex pfx)
        : Error("free resolution exceeded the maximum length"), prefix(std::move(pfx)) {}
};

// ideal of r x r minors; I_k = S for k <= 0, zero beyond the matrix size
Ideal minors_ideal(int r, const GradedMatrix& phi, ExecMode mode = default_exec_mode());

// largest r with a nonzero r x r minor; probabilistic guess certified by a
// symbolic expansion of all (r+1)-minors
int rank_of(const GradedMatrix& phi, std::uint64_t seed = kDefaultSeed);

// I(phi) = I_rank(phi); the unit ideal for rank 0
Ideal max_minors(const GradedMatrix& phi, std::uint64_t seed = kDefaultSeed,
                 ExecMode mode = default_exec_mode());

// matrix whose columns generate ker(phi)
GradedMatrix syzygy_matrix(const GradedMatrix& phi, ExecMode mode = default_exec_mode());

// minimal free resolution of coker(P): unit entries pruned after every
// syzygy step; throws PartialResolutionError past maxlen
FreeComplex minimal_free_resolution(const Presentation& P, int maxlen);

// presentation of H_i = ker(phi_i)/im(phi_{i+1}), 1 <= i <= length
Presentation homology_presentation(const FreeComplex& F, int i);

// subcomplex of a minimal free resolution spanned by summands with twists
// componentwise at most d + (n_1,...,n_k); products of projective spaces only
FreeComplex vres_of_pair(const FreeComplex& R, const Multidegree& d);

}  // namespace virtua
