#include "virtua/monomial.hpp"

namespace virtua {

namespace {

// grevlex on the positions [lo, hi) of the permuted exponent vectors:
// higher total degree wins; on ties the last differing position with the
// smaller exponent wins.
int grevlex_range(const Monomial& a, const Monomial& b, const std::vector<int>& perm,
                  int lo, int hi) {
    std::int64_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        int v = perm.empty() ? i : perm[i];
        da += a.exp(v);
        db += b.exp(v);
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
        int v = perm.empty() ? i : perm[i];
        if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const int n = a.nvars();
    switch (kind) {
        case Kind::Grevlex:
            return grevlex_range(a, b, perm, 0, n);
        case Kind::Block: {
            int c = grevlex_range(a, b, perm, 0, first_block);
            if (c) return c;
            return grevlex_range(a, b, perm, first_block, n);
        }
    }
    return 0;
}

}  // namespace virtua
