#pragma once

// Named identity suites. Each check reports PASS, FAIL (with the first
// counterexample), or SKIPPED when an enumeration bound was exceeded.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stirmat/algebra.hpp"
#include "stirmat/base_triangles.hpp"
#include "stirmat/composites.hpp"
#include "stirmat/errors.hpp"
#include "stirmat/oracles.hpp"
#include "stirmat/polybasis.hpp"
#include "stirmat/triangle.hpp"

namespace stirmat {

enum class CheckStatus { Pass, Fail, Skipped };

constexpr std::string_view status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

struct CheckResult {
    std::string suite;
    std::string name;
    CheckStatus status;
    std::string detail;
};

enum class Suite { ClosedForms, Recurrences, Inverses, RowSums, Bases, Oracles, Absorption };

inline constexpr std::array<Suite, 7> all_suites = {Suite::ClosedForms, Suite::Recurrences, Suite::Inverses,
                                                    Suite::RowSums,     Suite::Bases,       Suite::Oracles,
                                                    Suite::Absorption};

constexpr std::string_view suite_name(Suite s) {
    switch (s) {
    case Suite::ClosedForms: return "closed-forms";
    case Suite::Recurrences: return "recurrences";
    case Suite::Inverses: return "inverses";
    case Suite::RowSums: return "row-sums";
    case Suite::Bases: return "bases";
    case Suite::Oracles: return "oracles";
    case Suite::Absorption: return "absorption";
    }
    return "?";
}

struct CheckOptions {
    std::size_t max_n = 20;
    std::size_t oracle_max_n = 6;
    OracleLimits limits{};
};

// First entry where a and b differ, as "(n,m): x != y".
inline std::optional<std::string> first_difference(const Triangle& a, const Triangle& b) {
    if (a.order() != b.order()) {
        return "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()) + " differ";
    }
    for (std::size_t n = 0; n < a.order(); ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            if (a(n, m) != b(n, m)) {
                return "(" + std::to_string(n) + "," + std::to_string(m) + "): " + a(n, m).str() +
                       " != " + b(n, m).str();
            }
        }
    }
    return std::nullopt;
}

namespace check_detail {

class Recorder {
public:
    Recorder(std::vector<CheckResult>& out, Suite suite) : out_(out), suite_(suite_name(suite)) {}

    void expect(std::string name, const std::optional<std::string>& failure) {
        out_.push_back({suite_, std::move(name), failure ? CheckStatus::Fail : CheckStatus::Pass,
                        failure.value_or("")});
    }

    void equal(std::string name, const Triangle& actual, const Triangle& expected) {
        expect(std::move(name), first_difference(actual, expected));
    }

    void skip(std::string name, std::string why) {
        out_.push_back({suite_, std::move(name), CheckStatus::Skipped, std::move(why)});
    }

private:
    std::vector<CheckResult>& out_;
    std::string suite_;
};

inline std::string upto(std::size_t n) { return " n<=" + std::to_string(n); }

inline void closed_forms(Recorder& r, const CheckOptions& o) {
    for (const auto& info : pair_registry) {
        if (!info.has_closed_form) continue;
        const auto product = composite_product(info.pair, o.max_n);
        std::optional<std::string> failure;
        for (std::size_t n = 0; n <= o.max_n && !failure; ++n) {
            for (std::size_t m = 0; m <= n && !failure; ++m) {
                const auto cf = closed_form(info.pair, n, m);
                if (cf != product(n, m)) {
                    failure = "(" + std::to_string(n) + "," + std::to_string(m) + "): closed form " + cf.str() +
                              " != product " + product(n, m).str();
                }
            }
        }
        r.expect("closed form " + pair_label(info.pair) + upto(o.max_n), failure);
    }
}

inline void recurrences(Recorder& r, const CheckOptions& o) {
    for (const auto& info : pair_registry) {
        r.equal("recurrence " + pair_label(info.pair) + upto(o.max_n), composite_recurrence(info.pair, o.max_n),
                composite_product(info.pair, o.max_n));
    }
    const auto lah = base_triangle(TriangleKind::Lah, o.max_n);
    std::optional<std::string> failure;
    for (std::size_t n = 0; n <= o.max_n && !failure; ++n) {
        for (std::size_t m = 0; m <= n && !failure; ++m) {
            if (lah(n, m) != lah_closed(n, m)) failure = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        }
    }
    r.expect("lah recurrence vs n!/m! C(n-1,m-1)" + upto(o.max_n), failure);
}

inline void inverses(Recorder& r, const CheckOptions& o) {
    const auto id = identity_triangle(o.max_n);
    const std::pair<TriangleKind, TriangleKind> base_relations[] = {
        {TriangleKind::Binomial, TriangleKind::Binomial},
        {TriangleKind::Stirling1, TriangleKind::Stirling2},
        {TriangleKind::Stirling2, TriangleKind::Stirling1},
    };
    for (auto [kind, partner] : base_relations) {
        r.equal("inverse " + std::string(kind_symbol(kind)) + " = twist " + std::string(kind_symbol(partner)) +
                    upto(o.max_n),
                inverse(base_triangle(kind, o.max_n)), sign_twist(base_triangle(partner, o.max_n)));
    }
    for (const auto& info : pair_registry) {
        if (!info.inverse_partner) continue;
        const auto a = composite_product(info.pair, o.max_n);
        const auto b = sign_twist(composite_product(*info.inverse_partner, o.max_n));
        const auto label = pair_label(info.pair) + " * twist " + pair_label(*info.inverse_partner);
        r.equal(label + " = I" + upto(o.max_n), multiply(a, b), id);
        r.equal("twist " + pair_label(*info.inverse_partner) + " * " + pair_label(info.pair) + " = I" + upto(o.max_n),
                multiply(b, a), id);
    }
    for (auto left : all_triangle_kinds) {
        for (auto right : all_triangle_kinds) {
            const auto a = base_triangle(left, o.max_n);
            const auto b = base_triangle(right, o.max_n);
            const auto label = pair_label({left, right});
            r.equal("inverse " + label + " = inverse B * inverse A" + upto(o.max_n), inverse(multiply(a, b)),
                    multiply(inverse(b), inverse(a)));
            r.equal("twist " + label + " = twist A * twist B" + upto(o.max_n), sign_twist(multiply(a, b)),
                    multiply(sign_twist(a), sign_twist(b)));
        }
    }
}

inline void row_sums(Recorder& r, const CheckOptions& o) {
    const std::pair<TriangleKind, SequenceKind> base_sums[] = {
        {TriangleKind::Binomial, SequenceKind::Power2},
        {TriangleKind::Stirling1, SequenceKind::Factorial},
        {TriangleKind::Stirling2, SequenceKind::Bell},
        {TriangleKind::Lah, SequenceKind::LahTotal},
    };
    for (auto [kind, seq] : base_sums) {
        const auto t = base_triangle(kind, o.max_n);
        const auto target = sequence(seq, o.max_n);
        std::optional<std::string> failure;
        for (std::size_t n = 0; n <= o.max_n && !failure; ++n) {
            if (row_total(t, n) != target[n]) failure = "row " + std::to_string(n);
        }
        r.expect("row sums " + std::string(kind_name(kind)) + " = " + std::string(sequence_name(seq)) + upto(o.max_n),
                 failure);
    }
    for (const auto& info : pair_registry) {
        if (!info.row_sum) continue;
        const auto t = composite_product(info.pair, o.max_n);
        const auto target = sequence(info.row_sum->sequence, o.max_n + info.row_sum->shift);
        std::optional<std::string> failure;
        for (std::size_t n = 0; n <= o.max_n && !failure; ++n) {
            const auto sum = row_total(t, n);
            const auto& want = target[n + info.row_sum->shift];
            if (sum != want) failure = "row " + std::to_string(n) + ": " + sum.str() + " != " + want.str();
        }
        r.expect("row sums " + pair_label(info.pair) + " = " + std::string(sequence_name(info.row_sum->sequence)) +
                     (info.row_sum->shift ? "(n+1)" : "(n)") + upto(o.max_n),
                 failure);
    }
}

inline void bases(Recorder& r, const CheckOptions& o) {
    for (const auto& change : basis_registry()) {
        r.equal("basis " + std::string(family_name(change.family)) + " -> " +
                    (change.target == TargetBasis::Power ? "power" : "falling") + upto(o.max_n),
                change_matrix(change.family, change.target, o.max_n), change.expected.build(o.max_n));
    }
    const BasisFamily families[] = {BasisFamily::Power,      BasisFamily::Falling,  BasisFamily::Rising,
                                    BasisFamily::Shift1,     BasisFamily::Shift2,   BasisFamily::BinomRising,
                                    BasisFamily::Bell,       BasisFamily::BellShift1, BasisFamily::S2Rising,
                                    BasisFamily::S1Rising,   BasisFamily::S1Shift1};
    std::optional<std::string> failure;
    for (auto family : families) {
        const auto members = family_members(family, o.max_n);
        for (std::size_t n = 0; n <= o.max_n && !failure; ++n) {
            if (from_falling_basis(to_falling_basis(members[n])) != members[n]) {
                failure = std::string(family_name(family)) + " member " + std::to_string(n);
            }
        }
    }
    r.expect("falling-basis round trip" + upto(o.max_n), failure);

    // Falling factorials in the power basis are the signed Stirling numbers of the first kind.
    Triangle falling_to_power(o.max_n + 1);
    const auto falling = family_members(BasisFamily::Falling, o.max_n);
    for (std::size_t n = 0; n <= o.max_n; ++n) {
        for (std::size_t m = 0; m <= n; ++m) falling_to_power(n, m) = falling[n].coefficient(m);
    }
    r.equal("falling -> power = twist S1" + upto(o.max_n), falling_to_power,
            sign_twist(base_triangle(TriangleKind::Stirling1, o.max_n)));
    r.equal("(power -> falling) * (falling -> power) = I" + upto(o.max_n),
            multiply(change_matrix(BasisFamily::Power, TargetBasis::Falling, o.max_n), falling_to_power),
            identity_triangle(o.max_n));
}

struct OracleTarget {
    StructureKind kind;
    std::optional<TriangleKind> base;
    std::optional<Pair> composite;
};

inline const std::array<OracleTarget, 10>& oracle_targets() {
    using S = StructureKind;
    using K = TriangleKind;
    static const std::array<OracleTarget, 10> targets{{
        {S::SetPartitions, K::Stirling2, std::nullopt},
        {S::CyclePermutations, K::Stirling1, std::nullopt},
        {S::ListPartitions, K::Lah, std::nullopt},
        {S::NestedSubsets, std::nullopt, pairs::CC},
        {S::RefinementPairs, std::nullopt, pairs::S2S2},
        {S::ListRefinementPairs, std::nullopt, pairs::LL},
        {S::ColoredPartitions, std::nullopt, pairs::S2C},
        {S::SubsetCyclePermutations, std::nullopt, pairs::CS1},
        {S::PartitionPermutationPairs, std::nullopt, pairs::S2S1},
        {S::PermutationPairs, std::nullopt, pairs::S1S1},
    }};
    return targets;
}

inline Triangle oracle_expected(const OracleTarget& t, std::size_t max_row) {
    return t.base ? base_triangle(*t.base, max_row) : composite_product(*t.composite, max_row);
}

inline void oracles(Recorder& r, const CheckOptions& o) {
    const auto max_n = o.oracle_max_n;
    for (const auto& target : oracle_targets()) {
        const auto name = std::string(structure_name(target.kind));
        const auto expected = oracle_expected(target, max_n);
        std::optional<std::string> failure;
        std::size_t n = 0;
        try {
            for (; n <= max_n && !failure; ++n) {
                for (std::size_t m = 0; m <= n && !failure; ++m) {
                    const auto count = oracle_count(target.kind, n, m, o.limits);
                    if (count != expected(n, m)) {
                        failure = "(" + std::to_string(n) + "," + std::to_string(m) + "): enumerated " + count.str() +
                                  " != " + expected(n, m).str();
                    }
                }
            }
            r.expect(name + upto(max_n), failure);
        } catch (const ResourceLimitError& e) {
            // Rows below the bound were fully checked.
            if (n > 0) r.expect(name + upto(n - 1), failure);
            r.skip(name + (n == max_n ? " n=" + std::to_string(n) : " " + std::to_string(n) + "<=n<=" + std::to_string(max_n)),
                   e.what());
        }
    }

    const auto s1 = base_triangle(TriangleKind::Stirling1, max_n + 1);
    std::optional<std::string> failure;
    for (std::size_t n = 0; n <= max_n && !failure; ++n) {
        for (std::size_t k = 0; k <= n && !failure; ++k) {
            if (wrook_placements(n, k) != s1(n, n - k)) {
                failure = "wrooks(" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
        }
    }
    r.expect("wrook placements = [n,n-k]" + upto(max_n), failure);

    // Placing n-m wrooks on the (n+1)-staircase, split by the first column.
    failure.reset();
    for (std::size_t n = 0; n + 1 <= max_n && !failure; ++n) {
        for (std::size_t m = 0; m <= n && !failure; ++m) {
            Integer rhs = 0;
            for (std::size_t k = m; k <= n; ++k) rhs += s1(n, k) * binomial_row(k)[m];
            if (wrook_placements(n + 1, n - m) != rhs) {
                failure = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
            }
        }
    }
    r.expect("wrooks on staircase n+1 = sum [n,k] C(k,m)" + upto(max_n == 0 ? 0 : max_n - 1), failure);
}

inline void absorption(Recorder& r, const CheckOptions& o) {
    struct Case {
        std::string label;
        AbsorptionRule rule;
        Triangle values;
    };
    const Case cases[] = {
        {"(C,C)", AbsorptionRule::BinomialSquared, composite_product(pairs::CC, o.max_n)},
        {"(L,L)", AbsorptionRule::LahSquared, composite_product(pairs::LL, o.max_n)},
        {"L", AbsorptionRule::Lah, base_triangle(TriangleKind::Lah, o.max_n)},
    };
    for (const auto& c : cases) {
        std::optional<std::string> failure;
        for (std::size_t n = 0; n <= o.max_n && !failure; ++n) {
            for (std::size_t m = absorption_min_m(c.rule); m <= n && !failure; ++m) {
                const auto residual = absorption_residual(c.rule, c.values, n, m);
                if (residual != 0) {
                    failure = "(" + std::to_string(n) + "," + std::to_string(m) + "): residual " + residual.str();
                }
            }
        }
        r.expect("absorption " + c.label + upto(o.max_n), failure);
    }
}

} // namespace check_detail

inline std::vector<CheckResult> run_suite(Suite suite, const CheckOptions& options) {
    std::vector<CheckResult> out;
    check_detail::Recorder r(out, suite);
    switch (suite) {
    case Suite::ClosedForms: check_detail::closed_forms(r, options); break;
    case Suite::Recurrences: check_detail::recurrences(r, options); break;
    case Suite::Inverses: check_detail::inverses(r, options); break;
    case Suite::RowSums: check_detail::row_sums(r, options); break;
    case Suite::Bases: check_detail::bases(r, options); break;
    case Suite::Oracles: check_detail::oracles(r, options); break;
    case Suite::Absorption: check_detail::absorption(r, options); break;
    }
    return out;
}

} // namespace stirmat
