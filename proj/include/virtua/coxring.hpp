#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "virtua/poly.hpp"

namespace virtua {

// The ambient multigraded polynomial ring S = Cox(X): variable blocks with
// their Pic(X)-degrees, the dimension of X, the coefficient prime, and the
// variable subsets generating the prime components of the irrelevant ideal.
class CoxRing {
public:
    struct Block {
        std::string name;
        int count;
        Multidegree degree;  // degree of every variable in the block
    };

    // general Cox data: caller supplies blocks, dim X and the components of B
    // (as variable-index lists; each must generate a prime, i.e. be a subset
    // of the variables)
    CoxRing(std::vector<Block> blocks, int dim_x, std::uint32_t p,
            std::vector<std::vector<int>> irrelevant_components);

    // Cox ring of P^{d1} x ... x P^{dk}
    static std::shared_ptr<const CoxRing> product_space(const std::vector<int>& dims,
                                                        std::uint32_t p);

    int nvars() const { return static_cast<int>(var_names_.size()); }
    int pic_rank() const { return pic_rank_; }
    int dim_x() const { return dim_x_; }
    std::uint32_t modulus() const { return p_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const std::string& var_name(int i) const { return var_names_[i]; }
    const Multidegree& var_degree(int i) const { return var_degrees_[i]; }
    const std::vector<std::vector<int>>& irrelevant_component_vars() const {
        return irrelevant_vars_;
    }

    bool is_product() const { return is_product_; }
    const std::vector<int>& factor_dims() const { return factor_dims_; }

    // index of a named variable, if any
    std::optional<int> var_index(const std::string& name) const;

    Multidegree degree_of(const Monomial& m) const;
    // common multidegree of all terms; nullopt when terms disagree;
    // throws DegreeOfZeroError on the zero polynomial
    std::optional<Multidegree> multidegree_of(const Poly& f) const;
    bool is_homogeneous(const Poly& f) const;

    Scalar scalar(std::int64_t v) const { return Scalar(p_, v); }

    bool operator==(const CoxRing& o) const;

private:
    std::vector<Block> blocks_;
    int pic_rank_;
    int dim_x_;
    std::uint32_t p_;
    std::vector<std::string> var_names_;
    std::vector<Multidegree> var_degrees_;
    std::vector<std::vector<int>> irrelevant_vars_;
    bool is_product_ = false;
    std::vector<int> factor_dims_;
};

using RingPtr = std::shared_ptr<const CoxRing>;

// The irrelevant ideal B, stored through its prime components Q_1..Q_m (each
// generated by a subset of the variables). B itself is materialized on demand.
struct IrrelevantIdeal {
    std::vector<std::vector<int>> components;
};

IrrelevantIdeal irrelevant_components(const CoxRing& ring);

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !(*a == *b)) throw InputError("operands live in different rings");
}

}  // namespace virtua
