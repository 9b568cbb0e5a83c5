#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stirmat/algebra.hpp"
#include "stirmat/base_triangles.hpp"
#include "stirmat/errors.hpp"
#include "stirmat/integer.hpp"
#include "stirmat/triangle.hpp"

namespace stirmat {

// Ordered pair (A,B) naming the product A*B.
struct Pair {
    TriangleKind left;
    TriangleKind right;

    friend constexpr bool operator==(Pair, Pair) = default;
};

inline std::string pair_label(Pair p) {
    return "(" + std::string(kind_symbol(p.left)) + "," + std::string(kind_symbol(p.right)) + ")";
}

namespace pairs {
inline constexpr Pair CC{TriangleKind::Binomial, TriangleKind::Binomial};
inline constexpr Pair CS1{TriangleKind::Binomial, TriangleKind::Stirling1};
inline constexpr Pair CS2{TriangleKind::Binomial, TriangleKind::Stirling2};
inline constexpr Pair S1C{TriangleKind::Stirling1, TriangleKind::Binomial};
inline constexpr Pair S1S1{TriangleKind::Stirling1, TriangleKind::Stirling1};
inline constexpr Pair S1S2{TriangleKind::Stirling1, TriangleKind::Stirling2};
inline constexpr Pair S2C{TriangleKind::Stirling2, TriangleKind::Binomial};
inline constexpr Pair S2S1{TriangleKind::Stirling2, TriangleKind::Stirling1};
inline constexpr Pair S2S2{TriangleKind::Stirling2, TriangleKind::Stirling2};
inline constexpr Pair CL{TriangleKind::Binomial, TriangleKind::Lah};
inline constexpr Pair LC{TriangleKind::Lah, TriangleKind::Binomial};
inline constexpr Pair LL{TriangleKind::Lah, TriangleKind::Lah};
} // namespace pairs

// Value of |n,0| where the recurrence body does not apply.
enum class ColumnZero { One, KroneckerDelta, PowerOfTwo, Factorial, Bell, LahTotal };

// Coefficient of |n-1,m-1| in a two-term rule.
enum class DiagonalFactor { One, NOverM };

// Coefficient of |n-1,m| in a two-term rule.
enum class LowerFactor { Two, MPlusOne, N, TwoN, NPlusMMinusOne };

// Inner weight w_k of a convolution rule |n,m| = sum_k C(n-1,k-1) w_k |n-k,m-1|.
enum class ConvolutionWeight {
    Bell,              // B_k
    CycleArrangements, // sum_i [k,i] (i-1)!
    BlockArrangements, // sum_i {k,i} (i-1)!
};

enum class RecurrenceShape {
    TwoTerm,
    SubsetCycles,     // sum_k (n-1)^{falling k} |n-1-k,m-1| + |n-1,m|
    ColoredBlocks,    // |n-1,m-1| + m|n-1,m| + sum_k C(n-1,k) |n-1-k,m|
    Convolution,
};

struct RecurrenceFamily {
    RecurrenceShape shape;
    ColumnZero column_zero;
    DiagonalFactor diagonal = DiagonalFactor::One;
    LowerFactor lower = LowerFactor::Two;
    ConvolutionWeight weight = ConvolutionWeight::Bell;
};

struct RowSumTarget {
    SequenceKind sequence;
    std::size_t shift; // row n sums to term n + shift
};

struct PairInfo {
    Pair pair;
    std::string_view oeis;
    RecurrenceFamily recurrence;
    bool has_closed_form;
    std::optional<RowSumTarget> row_sum;
    std::optional<Pair> inverse_partner; // inverse(pair) = sign_twist(partner)
};

namespace detail {
using RF = RecurrenceFamily;
using RS = RecurrenceShape;
using CZ = ColumnZero;
using DF = DiagonalFactor;
using LF = LowerFactor;
using CW = ConvolutionWeight;
using SK = SequenceKind;
} // namespace detail

inline constexpr std::array<PairInfo, 12> pair_registry = [] {
    using namespace detail;
    using namespace pairs;
    return std::array<PairInfo, 12>{{
        {CC, "A038207", RF{RS::TwoTerm, CZ::PowerOfTwo, DF::One, LF::Two}, true, RowSumTarget{SK::Power3, 0},
         std::nullopt},
        {CS1, "A094816", RF{RS::SubsetCycles, CZ::One}, false, RowSumTarget{SK::TotalLists, 0}, S2C},
        {CS2, "A008277", RF{RS::TwoTerm, CZ::One, DF::One, LF::MPlusOne}, true, RowSumTarget{SK::Bell, 1}, S1C},
        {S1C, "A130534", RF{RS::TwoTerm, CZ::Factorial, DF::One, LF::N}, true, RowSumTarget{SK::Factorial, 1},
         CS2},
        {S1S1, "A325872", RF{RS::Convolution, CZ::KroneckerDelta, DF::One, LF::Two, CW::CycleArrangements}, false,
         RowSumTarget{SK::OrderedCycleFactorizations, 0}, S2S2},
        {S1S2, "A271703", RF{RS::TwoTerm, CZ::KroneckerDelta, DF::One, LF::NPlusMMinusOne}, true,
         RowSumTarget{SK::LahTotal, 0}, S1S2},
        {S2C, "A049020", RF{RS::ColoredBlocks, CZ::Bell}, false, RowSumTarget{SK::ColoredPartitions, 0}, CS1},
        {S2S1, "A129062", RF{RS::Convolution, CZ::KroneckerDelta, DF::One, LF::Two, CW::BlockArrangements}, false,
         RowSumTarget{SK::Fubini, 0}, S2S1},
        {S2S2, "A130191", RF{RS::Convolution, CZ::KroneckerDelta, DF::One, LF::Two, CW::Bell}, false,
         RowSumTarget{SK::PartitionPairs, 0}, S1S1},
        {CL, "A271705", RF{RS::TwoTerm, CZ::One, DF::NOverM, LF::N}, false, std::nullopt, std::nullopt},
        {LC, "A059110", RF{RS::TwoTerm, CZ::LahTotal, DF::NOverM, LF::N}, false, std::nullopt, std::nullopt},
        {LL, "", RF{RS::TwoTerm, CZ::KroneckerDelta, DF::NOverM, LF::TwoN}, true, std::nullopt, std::nullopt},
    }};
}();

inline const PairInfo* find_pair(Pair p) {
    auto it = std::find_if(pair_registry.begin(), pair_registry.end(), [p](const PairInfo& i) { return i.pair == p; });
    return it == pair_registry.end() ? nullptr : &*it;
}

inline const PairInfo& registered_pair(Pair p, std::string_view operation) {
    if (const auto* info = find_pair(p)) return *info;
    throw UnsupportedError(std::string(operation) + ": pair " + pair_label(p) + " is not in the registry");
}

// A*B for any pair of base kinds, rows 0..max_row.
inline Triangle composite_product(Pair p, std::size_t max_row) {
    return multiply(base_triangle(p.left, max_row), base_triangle(p.right, max_row));
}

namespace detail {

inline std::vector<Integer> column_zero_values(ColumnZero kind, std::size_t max_row) {
    switch (kind) {
    case ColumnZero::One: return std::vector<Integer>(max_row + 1, Integer(1));
    case ColumnZero::KroneckerDelta: {
        std::vector<Integer> v(max_row + 1, Integer(0));
        v[0] = 1;
        return v;
    }
    case ColumnZero::PowerOfTwo: return sequence(SequenceKind::Power2, max_row);
    case ColumnZero::Factorial: return sequence(SequenceKind::Factorial, max_row);
    case ColumnZero::Bell: return sequence(SequenceKind::Bell, max_row);
    case ColumnZero::LahTotal: return sequence(SequenceKind::LahTotal, max_row);
    }
    return {};
}

inline std::vector<Integer> convolution_weights(ConvolutionWeight kind, std::size_t max_row) {
    if (kind == ConvolutionWeight::Bell) return sequence(SequenceKind::Bell, max_row);
    const auto base = base_triangle(
        kind == ConvolutionWeight::CycleArrangements ? TriangleKind::Stirling1 : TriangleKind::Stirling2, max_row);
    std::vector<Integer> w(max_row + 1, Integer(0));
    for (std::size_t k = 1; k <= max_row; ++k) {
        for (std::size_t i = 1; i <= k; ++i) w[k] += base(k, i) * factorial(i - 1);
    }
    return w;
}

inline Integer lower_factor(LowerFactor f, std::size_t n, std::size_t m) {
    switch (f) {
    case LowerFactor::Two: return 2;
    case LowerFactor::MPlusOne: return m + 1;
    case LowerFactor::N: return n;
    case LowerFactor::TwoN: return 2 * n;
    case LowerFactor::NPlusMMinusOne: return n + m - 1;
    }
    return 0;
}

} // namespace detail

/**
 * Rows 0..max_row of a registered composite, built from its Pascal-like
 * recurrence instead of the matrix product. Boundary entries (m = 0 and
 * m = n) come from the boundary clauses only; the body covers 0 < m < n.
 * An n/m coefficient is applied as multiply-then-exact-divide.
 */
inline Triangle composite_recurrence(Pair p, std::size_t max_row) {
    const auto& rule = registered_pair(p, "composite_recurrence").recurrence;
    const auto column_zero = detail::column_zero_values(rule.column_zero, max_row);
    const auto pascal = base_triangle(TriangleKind::Binomial, max_row);
    std::vector<Integer> weights;
    if (rule.shape == RecurrenceShape::Convolution) weights = detail::convolution_weights(rule.weight, max_row);

    Triangle t(max_row + 1);
    for (std::size_t n = 0; n <= max_row; ++n) {
        t(n, 0) = column_zero[n];
        t(n, n) = 1;
        for (std::size_t m = 1; m < n; ++m) {
            Integer v = 0;
            switch (rule.shape) {
            case RecurrenceShape::TwoTerm:
                if (rule.diagonal == DiagonalFactor::NOverM) {
                    v = exact_div(n * t(n - 1, m - 1), m, "composite_recurrence n/m coefficient");
                } else {
                    v = t(n - 1, m - 1);
                }
                v += detail::lower_factor(rule.lower, n, m) * t(n - 1, m);
                break;
            case RecurrenceShape::SubsetCycles:
                for (std::size_t k = 0; k <= n - m; ++k) {
                    v += falling_factorial(static_cast<long long>(n) - 1, k) * t(n - 1 - k, m - 1);
                }
                v += t(n - 1, m);
                break;
            case RecurrenceShape::ColoredBlocks:
                v = t(n - 1, m - 1) + m * t(n - 1, m);
                for (std::size_t k = 0; k + 1 <= n - m; ++k) v += pascal(n - 1, k) * t(n - 1 - k, m);
                break;
            case RecurrenceShape::Convolution:
                for (std::size_t k = 1; k <= n - m + 1; ++k) v += pascal(n - 1, k - 1) * weights[k] * t(n - k, m - 1);
                break;
            }
            t(n, m) = std::move(v);
        }
    }
    return t;
}

namespace detail {

// {n,k} = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n
inline Integer stirling2_explicit(std::size_t n, std::size_t k) {
    const auto binom = binomial_row(k);
    Integer s = 0;
    for (std::size_t j = 0; j <= k; ++j) {
        Integer term = binom[j] * boost::multiprecision::pow(Integer(k - j), static_cast<unsigned>(n));
        if (j % 2 == 0) s += term;
        else s -= term;
    }
    return exact_div(s, factorial(k), "stirling2_explicit");
}

} // namespace detail

/**
 * Closed forms of the five composites that have one:
 *   (C,S2) -> {n+1,m+1}      (S1,C) -> [n+1,m+1]
 *   (S1,S2) -> L(n,m)        (C,C)  -> 2^(n-m) C(n,m)
 *   (L,L)  -> 2^(n-m) L(n,m)
 */
inline Integer closed_form(Pair p, std::size_t n, std::size_t m) {
    const auto* info = find_pair(p);
    if (info == nullptr || !info->has_closed_form) {
        throw UnsupportedError("closed_form: no closed form for " + pair_label(p));
    }
    if (m > n) throw RangeError("closed_form: m > n");
    if (p == pairs::CS2) return detail::stirling2_explicit(n + 1, m + 1);
    if (p == pairs::S1C) return base_triangle(TriangleKind::Stirling1, n + 1)(n + 1, m + 1);
    if (p == pairs::S1S2) return lah_closed(n, m);
    if (p == pairs::CC) return power(2, n - m) * binomial_row(n)[m];
    return power(2, n - m) * lah_closed(n, m); // (L,L)
}

// Rules whose multiplied-out residual must vanish.
enum class AbsorptionRule {
    BinomialSquared, // m |n,m| - n |n-1,m-1|,               m >= 1
    LahSquared,      // 2m(m-1) |n,m| - (n-m+1) |n,m-1|,      m >= 2
    Lah,             // m(m-1) L(n,m) - (n-m+1) L(n,m-1),     m >= 2
};

inline std::size_t absorption_min_m(AbsorptionRule rule) { return rule == AbsorptionRule::BinomialSquared ? 1 : 2; }

// Residual evaluated on a prebuilt triangle holding the relevant values.
inline Integer absorption_residual(AbsorptionRule rule, const Triangle& values, std::size_t n, std::size_t m) {
    values.check_row(n);
    if (m < absorption_min_m(rule) || m > n) {
        throw RangeError("absorption_residual: m = " + std::to_string(m) + " outside its domain for n = " +
                         std::to_string(n));
    }
    switch (rule) {
    case AbsorptionRule::BinomialSquared: return m * values(n, m) - n * values(n - 1, m - 1);
    case AbsorptionRule::LahSquared: return 2 * m * (m - 1) * values(n, m) - (n - m + 1) * values(n, m - 1);
    case AbsorptionRule::Lah: return m * (m - 1) * values(n, m) - (n - m + 1) * values(n, m - 1);
    }
    return 0;
}

inline AbsorptionRule absorption_rule(Pair p) {
    if (p == pairs::CC) return AbsorptionRule::BinomialSquared;
    if (p == pairs::LL) return AbsorptionRule::LahSquared;
    throw UnsupportedError("absorption_residual: no absorption identity for " + pair_label(p));
}

inline Integer absorption_residual(Pair p, std::size_t n, std::size_t m) {
    const auto rule = absorption_rule(p);
    return absorption_residual(rule, composite_product(p, n), n, m);
}

inline Integer absorption_residual(TriangleKind kind, std::size_t n, std::size_t m) {
    if (kind != TriangleKind::Lah) {
        throw UnsupportedError("absorption_residual: base kind " + std::string(kind_name(kind)) +
                               " has no registered absorption identity");
    }
    return absorption_residual(AbsorptionRule::Lah, base_triangle(TriangleKind::Lah, n), n, m);
}

inline const RowSumTarget& row_sum_target_of(Pair p) {
    const auto& info = registered_pair(p, "row_sum");
    if (!info.row_sum) throw UnsupportedError("row_sum: no row-sum identity registered for " + pair_label(p));
    return *info.row_sum;
}

// Sum of row n of A*B.
inline Integer row_sum(Pair p, std::size_t n) {
    row_sum_target_of(p);
    return row_total(composite_product(p, n), n);
}

// The closed or single-sum value that row n of A*B should sum to.
inline Integer row_sum_target(Pair p, std::size_t n) {
    const auto& target = row_sum_target_of(p);
    return sequence(target.sequence, n + target.shift)[n + target.shift];
}

struct InversePartner {
    Pair partner;
    bool sign_twisted;
};

// inverse(composite(p)) == sign_twist(composite(partner)).
inline InversePartner inverse_pair(Pair p) {
    const auto& info = registered_pair(p, "inverse_pair");
    if (!info.inverse_partner) throw UnsupportedError("inverse_pair: no inverse relation for " + pair_label(p));
    return {*info.inverse_partner, true};
}

} // namespace stirmat
