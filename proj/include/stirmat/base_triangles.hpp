#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stirmat/errors.hpp"
#include "stirmat/integer.hpp"
#include "stirmat/triangle.hpp"

namespace stirmat {

enum class TriangleKind { Binomial, Stirling1, Stirling2, Lah };

inline constexpr std::array<TriangleKind, 4> all_triangle_kinds = {
    TriangleKind::Binomial, TriangleKind::Stirling1, TriangleKind::Stirling2, TriangleKind::Lah};

// Name used on the command line.
constexpr std::string_view kind_name(TriangleKind kind) {
    switch (kind) {
    case TriangleKind::Binomial: return "binomial";
    case TriangleKind::Stirling1: return "stirling1";
    case TriangleKind::Stirling2: return "stirling2";
    case TriangleKind::Lah: return "lah";
    }
    return "?";
}

// Short symbol used in pair labels such as (C,S2).
constexpr std::string_view kind_symbol(TriangleKind kind) {
    switch (kind) {
    case TriangleKind::Binomial: return "C";
    case TriangleKind::Stirling1: return "S1";
    case TriangleKind::Stirling2: return "S2";
    case TriangleKind::Lah: return "L";
    }
    return "?";
}

inline std::optional<TriangleKind> parse_kind(std::string_view text) {
    for (auto kind : all_triangle_kinds) {
        if (text == kind_name(kind) || text == kind_symbol(kind)) return kind;
    }
    return std::nullopt;
}

/**
 * Rows 0..max_row of a base triangle, built by its two-term recurrence:
 *
 *   C(n,m)  = C(n-1,m-1) + C(n-1,m)
 *   [n,m]   = [n-1,m-1] + (n-1)[n-1,m]
 *   {n,m}   = {n-1,m-1} + m{n-1,m}
 *   L(n,m)  = L(n-1,m-1) + (n+m-1)L(n-1,m)
 *
 * Column 0 is 1 for binomials and the Kronecker delta otherwise; the
 * diagonal is 1 for all four.
 */
inline Triangle base_triangle(TriangleKind kind, std::size_t max_row) {
    Triangle t(max_row + 1);
    for (std::size_t n = 0; n <= max_row; ++n) {
        t(n, n) = 1;
        if (n == 0) continue;
        t(n, 0) = kind == TriangleKind::Binomial ? 1 : 0;
        for (std::size_t m = 1; m < n; ++m) {
            std::size_t weight = 0;
            switch (kind) {
            case TriangleKind::Binomial: weight = 1; break;
            case TriangleKind::Stirling1: weight = n - 1; break;
            case TriangleKind::Stirling2: weight = m; break;
            case TriangleKind::Lah: weight = n + m - 1; break;
            }
            t(n, m) = t(n - 1, m - 1) + weight * t(n - 1, m);
        }
    }
    return t;
}

// Pascal row n, used where a single binomial row is enough.
inline std::vector<Integer> binomial_row(std::size_t n) {
    std::vector<Integer> row(n + 1);
    row[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

// L(n,m) = n!/m! * C(n-1,m-1), with L(0,0) = 1 and L(n,0) = 0 for n > 0.
inline Integer lah_closed(std::size_t n, std::size_t m) {
    if (m > n) throw RangeError("lah_closed: m > n");
    if (m == 0) return n == 0 ? 1 : 0;
    return factorial(n) / factorial(m) * binomial_row(n - 1)[m - 1];
}

enum class SequenceKind {
    Factorial,
    Power2,
    Power3,
    Bell,
    LahTotal,
    Fubini,
    OrderedCycleFactorizations,
    ColoredPartitions,
    TotalLists,
    PartitionPairs,
};

inline constexpr std::array<SequenceKind, 10> all_sequence_kinds = {
    SequenceKind::Factorial,         SequenceKind::Power2,     SequenceKind::Power3,
    SequenceKind::Bell,              SequenceKind::LahTotal,   SequenceKind::Fubini,
    SequenceKind::OrderedCycleFactorizations, SequenceKind::ColoredPartitions,
    SequenceKind::TotalLists,        SequenceKind::PartitionPairs,
};

constexpr std::string_view sequence_name(SequenceKind kind) {
    switch (kind) {
    case SequenceKind::Factorial: return "factorial";
    case SequenceKind::Power2: return "power2";
    case SequenceKind::Power3: return "power3";
    case SequenceKind::Bell: return "bell";
    case SequenceKind::LahTotal: return "lah-total";
    case SequenceKind::Fubini: return "fubini";
    case SequenceKind::OrderedCycleFactorizations: return "ordered-cycle-factorizations";
    case SequenceKind::ColoredPartitions: return "colored-partitions";
    case SequenceKind::TotalLists: return "total-lists";
    case SequenceKind::PartitionPairs: return "partition-pairs";
    }
    return "?";
}

/**
 * Terms 0..max_index of a scalar sequence, each one a single sum over a
 * row of a base triangle:
 *
 *   factorial    sum [n,m]            bell          sum {n,m}
 *   power2       sum C(n,m)           lah-total     sum L(n,m)
 *   power3       sum C(n,m) 2^m       fubini        sum {n,m} m!
 *   ordered-cycle-factorizations      sum [n,m] m!
 *   colored-partitions                sum {n,m} 2^m
 *   total-lists                       sum n!/m!
 *   partition-pairs                   sum {n,m} B_m
 */
inline std::vector<Integer> sequence(SequenceKind kind, std::size_t max_index) {
    auto row_sum_weighted = [&](const Triangle& t, auto weight) {
        std::vector<Integer> out(max_index + 1);
        for (std::size_t n = 0; n <= max_index; ++n) {
            Integer s = 0;
            for (std::size_t m = 0; m <= n; ++m) s += t(n, m) * weight(n, m);
            out[n] = s;
        }
        return out;
    };
    auto one = [](std::size_t, std::size_t) { return Integer(1); };
    auto fact_m = [](std::size_t, std::size_t m) { return factorial(m); };
    auto two_m = [](std::size_t, std::size_t m) { return power(2, m); };

    switch (kind) {
    case SequenceKind::Factorial:
        return row_sum_weighted(base_triangle(TriangleKind::Stirling1, max_index), one);
    case SequenceKind::Power2:
        return row_sum_weighted(base_triangle(TriangleKind::Binomial, max_index), one);
    case SequenceKind::Power3:
        return row_sum_weighted(base_triangle(TriangleKind::Binomial, max_index), two_m);
    case SequenceKind::Bell:
        return row_sum_weighted(base_triangle(TriangleKind::Stirling2, max_index), one);
    case SequenceKind::LahTotal:
        return row_sum_weighted(base_triangle(TriangleKind::Lah, max_index), one);
    case SequenceKind::Fubini:
        return row_sum_weighted(base_triangle(TriangleKind::Stirling2, max_index), fact_m);
    case SequenceKind::OrderedCycleFactorizations:
        return row_sum_weighted(base_triangle(TriangleKind::Stirling1, max_index), fact_m);
    case SequenceKind::ColoredPartitions:
        return row_sum_weighted(base_triangle(TriangleKind::Stirling2, max_index), two_m);
    case SequenceKind::TotalLists: {
        std::vector<Integer> out(max_index + 1);
        for (std::size_t n = 0; n <= max_index; ++n) {
            Integer s = 0;
            for (std::size_t m = 0; m <= n; ++m) s += falling_factorial(static_cast<long long>(n), n - m);
            out[n] = s;
        }
        return out;
    }
    case SequenceKind::PartitionPairs: {
        const auto bell = sequence(SequenceKind::Bell, max_index);
        return row_sum_weighted(base_triangle(TriangleKind::Stirling2, max_index),
                                [&](std::size_t, std::size_t m) { return bell[m]; });
    }
    }
    return {};
}

} // namespace stirmat
