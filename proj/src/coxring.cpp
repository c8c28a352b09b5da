#include "virtua/coxring.hpp"

namespace virtua {

CoxRing::CoxRing(std::vector<Block> blocks, int dim_x, std::uint32_t p,
                 std::vector<std::vector<int>> irrelevant_components)
    : blocks_(std::move(blocks)), dim_x_(dim_x), p_(p),
      irrelevant_vars_(std::move(irrelevant_components)) {
    if (blocks_.empty()) throw InputError("ring needs at least one variable block");
    if (!is_prime(p_)) throw InputError("coefficient modulus " + std::to_string(p_) + " is not prime");
    pic_rank_ = blocks_[0].degree.rank();
    for (const auto& b : blocks_) {
        if (b.count <= 0) throw InputError("block '" + b.name + "' has no variables");
        if (b.degree.rank() != pic_rank_) throw InputError("inconsistent grading rank");
        for (int i = 0; i < b.count; ++i) {
            var_names_.push_back(b.count == 1 ? b.name : b.name + std::to_string(i));
            var_degrees_.push_back(b.degree);
        }
    }
    for (const auto& comp : irrelevant_vars_) {
        if (comp.empty()) throw InputError("empty irrelevant component");
        for (int v : comp)
            if (v < 0 || v >= nvars()) throw InputError("irrelevant component names unknown variable");
    }
}

std::shared_ptr<const CoxRing> CoxRing::product_space(const std::vector<int>& dims,
                                                      std::uint32_t p) {
    if (dims.empty()) throw InputError("product space needs at least one factor");
    const int k = static_cast<int>(dims.size());
    // block names x, y, z, w, u, v, ... wrapping with suffixes if ever needed
    static const char* names = "xyzwuvabcdefgh";
    std::vector<Block> blocks;
    std::vector<std::vector<int>> comps;
    int dim_x = 0, var0 = 0;
    for (int j = 0; j < k; ++j) {
        if (dims[j] <= 0) throw InputError("factor dimensions must be positive");
        Multidegree d = Multidegree::zero(k);
        d.c[j] = 1;
        std::string nm = j < 14 ? std::string(1, names[j]) : "v" + std::to_string(j) + "_";
        blocks.push_back(Block{nm, dims[j] + 1, d});
        std::vector<int> comp;
        for (int i = 0; i <= dims[j]; ++i) comp.push_back(var0 + i);
        comps.push_back(std::move(comp));
        var0 += dims[j] + 1;
        dim_x += dims[j];
    }
    auto ring = std::make_shared<CoxRing>(std::move(blocks), dim_x, p, std::move(comps));
    const_cast<CoxRing&>(*ring).is_product_ = true;
    const_cast<CoxRing&>(*ring).factor_dims_ = dims;
    return ring;
}

std::optional<int> CoxRing::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (var_names_[i] == name) return i;
    return std::nullopt;
}

Multidegree CoxRing::degree_of(const Monomial& m) const {
    Multidegree d = Multidegree::zero(pic_rank_);
    for (int i = 0; i < nvars() && i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        for (int c = 0; c < pic_rank_; ++c) d.c[c] += m.exp(i) * var_degrees_[i].c[c];
    }
    return d;
}

std::optional<Multidegree> CoxRing::multidegree_of(const Poly& f) const {
    if (f.is_zero()) throw DegreeOfZeroError("multidegree of the zero polynomial");
    Multidegree d = degree_of(f.terms()[0].mon);
    for (size_t i = 1; i < f.terms().size(); ++i)
        if (degree_of(f.terms()[i].mon) != d) return std::nullopt;
    return d;
}

bool CoxRing::is_homogeneous(const Poly& f) const {
    if (f.is_zero()) return true;
    return multidegree_of(f).has_value();
}

bool CoxRing::operator==(const CoxRing& o) const {
    if (p_ != o.p_ || dim_x_ != o.dim_x_ || pic_rank_ != o.pic_rank_) return false;
    if (var_names_ != o.var_names_) return false;
    for (int i = 0; i < nvars(); ++i)
        if (var_degrees_[i] != o.var_degrees_[i]) return false;
    return irrelevant_vars_ == o.irrelevant_vars_;
}

IrrelevantIdeal irrelevant_components(const CoxRing& ring) {
    return IrrelevantIdeal{ring.irrelevant_component_vars()};
}

}  // namespace virtua
