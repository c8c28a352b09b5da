#pragma once

#include <cstdint>
#include <string>

#include "virtua/errors.hpp"

namespace virtua {

// Element of the prime field GF(p). Each value carries its modulus, so
// scalars from different sessions cannot be combined silently.
class Scalar {
public:
    Scalar(std::uint32_t p, std::int64_t value) : p_(p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    static Scalar zero(std::uint32_t p) { return Scalar(p, 0); }
    static Scalar one(std::uint32_t p) { return Scalar(p, 1); }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    // Representative in (-p/2, p/2], used by the printer.
    std::int64_t balanced() const {
        return v_ <= p_ / 2 ? static_cast<std::int64_t>(v_)
                            : static_cast<std::int64_t>(v_) - p_;
    }

    Scalar operator+(const Scalar& o) const {
        check(o);
        std::uint32_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(p_, s);
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        std::uint32_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return raw(p_, s);
    }
    Scalar operator*(const Scalar& o) const {
        check(o);
        return raw(p_, static_cast<std::uint32_t>(
                           (static_cast<std::uint64_t>(v_) * o.v_) % p_));
    }
    Scalar operator-() const { return raw(p_, v_ == 0 ? 0 : p_ - v_); }

    Scalar inverse() const {
        if (v_ == 0) throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(p_) + ")");
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p_;
        return raw(p_, static_cast<std::uint32_t>(t));
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    static Scalar raw(std::uint32_t p, std::uint32_t v) {
        Scalar s(p, 0);
        s.v_ = v;
        return s;
    }
    void check(const Scalar& o) const {
        if (p_ != o.p_) throw Error("mixed moduli: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }

    std::uint32_t p_;
    std::uint32_t v_;
};

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline Scalar scalar_inverse(const Scalar& a) { return a.inverse(); }

}  // namespace virtua
