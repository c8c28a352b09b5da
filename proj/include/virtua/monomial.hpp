#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "virtua/errors.hpp"

namespace virtua {

// Element of the grading group Pic(X) = Z^r. Twists of free summands may be
// negative; degrees of monomials in the ring are componentwise nonnegative.
struct Multidegree {
    std::vector<std::int32_t> c;

    Multidegree() = default;
    explicit Multidegree(std::vector<std::int32_t> v) : c(std::move(v)) {}
    static Multidegree zero(int rank) { return Multidegree(std::vector<std::int32_t>(rank, 0)); }

    int rank() const { return static_cast<int>(c.size()); }

    Multidegree operator+(const Multidegree& o) const {
        Multidegree r = *this;
        for (int i = 0; i < rank(); ++i) r.c[i] += o.c[i];
        return r;
    }
    Multidegree operator-(const Multidegree& o) const {
        Multidegree r = *this;
        for (int i = 0; i < rank(); ++i) r.c[i] -= o.c[i];
        return r;
    }
    bool operator==(const Multidegree& o) const { return c == o.c; }
    bool operator!=(const Multidegree& o) const { return !(*this == o); }
    // componentwise comparison; used by the truncation rule
    bool leq(const Multidegree& o) const {
        for (int i = 0; i < rank(); ++i)
            if (c[i] > o.c[i]) return false;
        return true;
    }
    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < rank(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
    // lexicographic; gives deterministic sorts of twist lists
    bool operator<(const Multidegree& o) const { return c < o.c; }
};

// Exponent vector of a power product. Length is fixed by the ambient ring.
class Monomial {
public:
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> e) : e_(std::move(e)) {}

    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial variable(int nvars, int idx, std::int32_t power = 1) {
        Monomial m(nvars);
        m.e_[idx] = power;
        return m;
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    std::int32_t exp(int i) const { return e_[i]; }
    const std::vector<std::int32_t>& exps() const { return e_; }
    bool is_one() const {
        for (auto x : e_)
            if (x) return false;
        return true;
    }
    std::int64_t total_degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < r.nvars(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    // does *this divide m?
    bool divides(const Monomial& m) const {
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }
    // m / *this, checked
    Monomial divide(const Monomial& num) const {
        Monomial r = num;
        for (int i = 0; i < nvars(); ++i) {
            r.e_[i] -= e_[i];
            if (r.e_[i] < 0) throw MonomialDivisionError("monomial division underflow");
        }
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < r.nvars(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }
    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < r.nvars(); ++i)
            if (b.e_[i] < r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }
    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.nvars(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }
    std::uint32_t support_mask() const {
        std::uint32_t m = 0;
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > 0) m |= (1u << i);
        return m;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::int32_t> e_;
};

// Total order on monomials compatible with multiplication. Grevlex is the
// session default; the block order eliminates a leading group of variables.
struct MonomialOrder {
    enum class Kind { Grevlex, Block };

    Kind kind = Kind::Grevlex;
    // size of the dominating block (Block only), counted in permuted positions
    int first_block = 0;
    // perm[i] = index of the variable at position i; empty means identity
    std::vector<int> perm;

    static MonomialOrder grevlex() { return MonomialOrder{}; }
    static MonomialOrder block_elim(int first_block, std::vector<int> perm = {}) {
        MonomialOrder o;
        o.kind = Kind::Block;
        o.first_block = first_block;
        o.perm = std::move(perm);
        return o;
    }

    // -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && first_block == o.first_block && perm == o.perm;
    }
};

}  // namespace virtua
