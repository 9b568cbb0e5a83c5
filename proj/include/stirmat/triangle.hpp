#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stirmat/errors.hpp"
#include "stirmat/integer.hpp"

namespace stirmat {

/**
 * Truncated lower-triangular integer matrix indexed from (0,0).
 *
 * Row n stores exactly n+1 entries (n,0)..(n,n); everything above the
 * diagonal is an implicit zero. Builders in this library take the index
 * of the last row, so `build(N)` has order N+1.
 */
class Triangle {
public:
    Triangle() = default;

    // Zero-filled triangle with `order` rows.
    explicit Triangle(std::size_t order) : rows_(order) {
        for (std::size_t n = 0; n < order; ++n) rows_[n].assign(n + 1, Integer(0));
    }

    explicit Triangle(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            if (rows_[n].size() != n + 1) {
                throw ShapeError("row " + std::to_string(n) + " has " + std::to_string(rows_[n].size()) +
                                 " entries, expected " + std::to_string(n + 1));
            }
        }
    }

    Triangle(std::initializer_list<std::initializer_list<long long>> rows) {
        std::vector<std::vector<Integer>> converted;
        for (auto row : rows) converted.emplace_back(row.begin(), row.end());
        *this = Triangle(std::move(converted));
    }

    std::size_t order() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    std::span<const Integer> row(std::size_t n) const {
        check_row(n);
        return rows_[n];
    }

    // Stored entry; m must not exceed n.
    const Integer& operator()(std::size_t n, std::size_t m) const { return rows_[n][m]; }
    Integer& operator()(std::size_t n, std::size_t m) { return rows_[n][m]; }

    const std::vector<std::vector<Integer>>& rows() const noexcept { return rows_; }

    friend bool operator==(const Triangle&, const Triangle&) = default;

    void check_row(std::size_t n) const {
        if (n >= rows_.size()) {
            throw RangeError("row " + std::to_string(n) + " outside triangle of order " +
                             std::to_string(rows_.size()));
        }
    }

private:
    std::vector<std::vector<Integer>> rows_;
};

// Entry (n,m); zero above the diagonal.
inline Integer entry(const Triangle& t, std::size_t n, std::size_t m) {
    t.check_row(n);
    return m <= n ? t(n, m) : Integer(0);
}

// (n,m) -> (-1)^(n-m) * (n,m).
inline Triangle sign_twist(const Triangle& t) {
    Triangle out = t;
    for (std::size_t n = 0; n < out.order(); ++n) {
        for (std::size_t m = (n % 2 == 0) ? 1 : 0; m <= n; m += 2) out(n, m) = -out(n, m);
    }
    return out;
}

// Rows 0..max_row of t.
inline Triangle truncate(const Triangle& t, std::size_t max_row) {
    if (max_row >= t.order()) {
        throw RangeError("cannot truncate triangle of order " + std::to_string(t.order()) + " to rows 0.." +
                         std::to_string(max_row));
    }
    return Triangle(std::vector<std::vector<Integer>>(t.rows().begin(), t.rows().begin() + max_row + 1));
}

inline Triangle identity_triangle(std::size_t max_row) {
    Triangle t(max_row + 1);
    for (std::size_t n = 0; n <= max_row; ++n) t(n, n) = 1;
    return t;
}

inline Integer row_total(const Triangle& t, std::size_t n) {
    Integer s = 0;
    for (const auto& v : t.row(n)) s += v;
    return s;
}

} // namespace stirmat
