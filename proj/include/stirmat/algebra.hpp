#pragma once

#include <cstddef>
#include <string>

#include "stirmat/errors.hpp"
#include "stirmat/triangle.hpp"

namespace stirmat {

// (A*B)(n,m) = sum_{k=m..n} A(n,k) B(k,m), summed left to right.
inline Triangle multiply(const Triangle& a, const Triangle& b) {
    if (a.order() != b.order()) {
        throw ShapeError("multiply: orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()) +
                         " differ");
    }
    Triangle out(a.order());
    for (std::size_t n = 0; n < a.order(); ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            Integer s = 0;
            for (std::size_t k = m; k <= n; ++k) s += a(n, k) * b(k, m);
            out(n, m) = std::move(s);
        }
    }
    return out;
}

/**
 * Inverse of a triangle whose diagonal entries are all +1 or -1, by
 * forward substitution. Entry (n,m) of the result depends only on the
 * leading (n+1)x(n+1) block, so truncated inverses are exact.
 */
inline Triangle inverse(const Triangle& t) {
    for (std::size_t n = 0; n < t.order(); ++n) {
        if (t(n, n) != 1 && t(n, n) != -1) {
            throw NonInvertibleError("inverse: diagonal entry (" + std::to_string(n) + "," + std::to_string(n) +
                                     ") = " + t(n, n).str() + " is not a unit");
        }
    }
    Triangle inv(t.order());
    // Column by column: sum_{k=m..n} T(n,k) X(k,m) = delta_{nm}.
    for (std::size_t m = 0; m < t.order(); ++m) {
        inv(m, m) = t(m, m); // 1/d = d for d = +-1
        for (std::size_t n = m + 1; n < t.order(); ++n) {
            Integer s = 0;
            for (std::size_t k = m; k < n; ++k) s += t(n, k) * inv(k, m);
            inv(n, m) = -s * t(n, n);
        }
    }
    return inv;
}

inline bool is_identity(const Triangle& t) {
    for (std::size_t n = 0; n < t.order(); ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            if (t(n, m) != (m == n ? 1 : 0)) return false;
        }
    }
    return true;
}

} // namespace stirmat
