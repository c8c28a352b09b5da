#pragma once

#include <string>

#include "virtua/errors.hpp"

namespace virtua {

// Value on the extended scale {0, 1, 2, ...} plus infinity. Depths and
// codimensions live here; the unit ideal gets infinite depth.
class ExtInt {
public:
    ExtInt(int v) : v_(v), inf_(false) {}
    static ExtInt infinity() {
        ExtInt e(0);
        e.inf_ = true;
        return e;
    }

    bool is_infinite() const { return inf_; }
    int value() const {
        if (inf_) throw Error("value() on infinite depth");
        return v_;
    }

    bool operator>=(int i) const { return inf_ || v_ >= i; }
    bool operator==(const ExtInt& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }
    bool operator==(int i) const { return !inf_ && v_ == i; }
    bool operator>=(const ExtInt& o) const {
        if (inf_) return true;
        if (o.inf_) return false;
        return v_ >= o.v_;
    }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    int v_;
    bool inf_;
};

}  // namespace virtua
