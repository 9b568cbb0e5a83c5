#pragma once

// Brute-force counters for the combinatorial structures behind each
// triangle. Every count comes from generating the structures over the
// ground set {0..n-1} and inspecting them; nothing here calls into the
// triangle builders.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "stirmat/errors.hpp"
#include "stirmat/integer.hpp"

namespace stirmat {

enum class StructureKind {
    SetPartitions,               // {n,m}
    CyclePermutations,           // [n,m]
    ListPartitions,              // L(n,m)
    NestedSubsets,               // (C,C)
    RefinementPairs,             // (S2,S2)
    ListRefinementPairs,         // (L,L)
    ColoredPartitions,           // (S2,C)
    SubsetCyclePermutations,     // (C,S1)
    PartitionPermutationPairs,   // (S2,S1)
    PermutationPairs,            // (S1,S1)
};

inline constexpr std::array<StructureKind, 10> all_structure_kinds = {
    StructureKind::SetPartitions,           StructureKind::CyclePermutations,
    StructureKind::ListPartitions,          StructureKind::NestedSubsets,
    StructureKind::RefinementPairs,         StructureKind::ListRefinementPairs,
    StructureKind::ColoredPartitions,       StructureKind::SubsetCyclePermutations,
    StructureKind::PartitionPermutationPairs, StructureKind::PermutationPairs,
};

constexpr std::string_view structure_name(StructureKind kind) {
    switch (kind) {
    case StructureKind::SetPartitions: return "set-partitions";
    case StructureKind::CyclePermutations: return "cycle-permutations";
    case StructureKind::ListPartitions: return "list-partitions";
    case StructureKind::NestedSubsets: return "nested-subsets";
    case StructureKind::RefinementPairs: return "refinement-pairs";
    case StructureKind::ListRefinementPairs: return "list-refinement-pairs";
    case StructureKind::ColoredPartitions: return "colored-partitions";
    case StructureKind::SubsetCyclePermutations: return "subset-cycle-permutations";
    case StructureKind::PartitionPermutationPairs: return "partition-permutation-pairs";
    case StructureKind::PermutationPairs: return "permutation-pairs";
    }
    return "?";
}

// Single structures count one object per ground set; the rest count pairs.
constexpr bool is_single_structure(StructureKind kind) {
    return kind == StructureKind::SetPartitions || kind == StructureKind::CyclePermutations ||
           kind == StructureKind::ListPartitions;
}

struct OracleLimits {
    std::size_t single_max_n = 8;
    std::size_t pair_max_n = 7;

    std::size_t bound(StructureKind kind) const { return is_single_structure(kind) ? single_max_n : pair_max_n; }
};

namespace oracle_detail {

using Blocks = std::vector<std::vector<int>>;

// Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> go = [&](int i, int blocks) {
        if (i == n) {
            visit(label, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[static_cast<std::size_t>(i)] = b;
            go(i + 1, std::max(blocks, b + 1));
        }
    };
    go(0, 0);
}

inline int count_cycles(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (auto j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
    }
    return cycles;
}

inline void for_each_permutation(int degree, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> perm(static_cast<std::size_t>(degree));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        visit(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

/**
 * Every partition of {0..n-1} into lists. Element i either opens a new
 * list or is inserted at one of the positions of an existing list, so
 * each list partition is produced exactly once.
 */
inline std::vector<Blocks> all_list_partitions(int n) {
    std::vector<Blocks> out;
    Blocks current;
    std::function<void(int)> go = [&](int i) {
        if (i == n) {
            out.push_back(current);
            return;
        }
        // Index access: the recursion appends to `current`.
        for (std::size_t l = 0; l < current.size(); ++l) {
            for (std::size_t pos = 0; pos <= current[l].size(); ++pos) {
                current[l].insert(current[l].begin() + static_cast<std::ptrdiff_t>(pos), i);
                go(i + 1);
                current[l].erase(current[l].begin() + static_cast<std::ptrdiff_t>(pos));
            }
        }
        current.push_back({i});
        go(i + 1);
        current.pop_back();
    };
    go(0);
    return out;
}

inline bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
    for (std::size_t i = 0; i < fine.size(); ++i) {
        for (std::size_t j = i + 1; j < fine.size(); ++j) {
            if (fine[i] == fine[j] && coarse[i] != coarse[j]) return false;
        }
    }
    return true;
}

// Bit (a*n + b) is set when b directly follows a inside one list.
inline std::uint64_t successor_mask(const Blocks& lists, int n) {
    std::uint64_t mask = 0;
    for (const auto& list : lists) {
        for (std::size_t i = 0; i + 1 < list.size(); ++i) mask |= std::uint64_t{1} << (list[i] * n + list[i + 1]);
    }
    return mask;
}

inline std::uint64_t count_set_partitions(int n, int m) {
    std::uint64_t count = 0;
    for_each_set_partition(n, [&](const std::vector<int>&, int blocks) { count += blocks == m; });
    return count;
}

inline std::uint64_t count_cycle_permutations(int n, int m) {
    std::uint64_t count = 0;
    for_each_permutation(n, [&](const std::vector<int>& p) { count += count_cycles(p) == m; });
    return count;
}

inline std::uint64_t count_list_partitions(int n, int m) {
    std::uint64_t count = 0;
    for (const auto& lp : all_list_partitions(n)) count += static_cast<int>(lp.size()) == m;
    return count;
}

// (K,M) with M subset of K subset of {0..n-1} and |M| = m.
inline std::uint64_t count_nested_subsets(int n, int m) {
    std::uint64_t count = 0;
    const unsigned full = (1u << n) - 1;
    for (unsigned k = 0; k <= full; ++k) {
        for (unsigned sub = k;; sub = (sub - 1) & k) {
            count += std::popcount(sub) == m;
            if (sub == 0) break;
        }
    }
    return count;
}

// (P1,P2) set partitions, P1 refines P2, P2 has m blocks.
inline std::uint64_t count_refinement_pairs(int n, int m) {
    std::vector<std::pair<std::vector<int>, int>> parts;
    for_each_set_partition(n, [&](const std::vector<int>& l, int b) { parts.emplace_back(l, b); });
    std::uint64_t count = 0;
    for (const auto& [coarse, blocks] : parts) {
        if (blocks != m) continue;
        for (const auto& fine : parts) count += refines(fine.first, coarse);
    }
    return count;
}

/**
 * (P1,P2) list partitions, P2 has m lists, and every list of P1 is a
 * contiguous segment of some list of P2. A list [a1..ak] is such a
 * segment exactly when each a_{i+1} directly follows a_i in P2, so the
 * test is that P1's successor links are a subset of P2's.
 */
inline std::uint64_t count_list_refinement_pairs(int n, int m) {
    const auto lists = all_list_partitions(n);
    std::vector<std::uint64_t> masks;
    masks.reserve(lists.size());
    for (const auto& lp : lists) masks.push_back(successor_mask(lp, n));
    std::uint64_t count = 0;
    for (std::size_t c = 0; c < lists.size(); ++c) {
        if (static_cast<int>(lists[c].size()) != m) continue;
        const auto coarse = masks[c];
        for (const auto fine : masks) count += (fine & ~coarse) == 0;
    }
    return count;
}

// Set partitions with each block colored red or blue, m red blocks.
inline std::uint64_t count_colored_partitions(int n, int m) {
    std::uint64_t count = 0;
    for_each_set_partition(n, [&](const std::vector<int>&, int blocks) {
        for (unsigned color = 0; color < (1u << blocks); ++color) count += std::popcount(color) == m;
    });
    return count;
}

// Permutations with m cycles of every subset T of {0..n-1}.
inline std::uint64_t count_subset_cycle_permutations(int n, int m) {
    std::uint64_t count = 0;
    for (unsigned subset = 0; subset < (1u << n); ++subset) {
        std::vector<int> elems;
        for (int i = 0; i < n; ++i) {
            if (subset >> i & 1u) elems.push_back(i);
        }
        // Permutation of T as a bijection T -> T written through positions.
        std::vector<int> image = elems;
        do {
            std::vector<int> perm(elems.size());
            for (std::size_t i = 0; i < elems.size(); ++i) {
                perm[i] = static_cast<int>(std::find(elems.begin(), elems.end(), image[i]) - elems.begin());
            }
            count += count_cycles(perm) == m;
        } while (std::next_permutation(image.begin(), image.end()));
    }
    return count;
}

// (P, pi): P a set partition, pi a permutation of P's blocks with m cycles.
inline std::uint64_t count_partition_permutation_pairs(int n, int m) {
    std::uint64_t count = 0;
    for_each_set_partition(n, [&](const std::vector<int>&, int blocks) {
        for_each_permutation(blocks, [&](const std::vector<int>& p) { count += count_cycles(p) == m; });
    });
    return count;
}

// (pi1, pi2): pi1 in S_n, pi2 in S_{cycles(pi1)} with m cycles.
inline std::uint64_t count_permutation_pairs(int n, int m) {
    std::uint64_t count = 0;
    for_each_permutation(n, [&](const std::vector<int>& p1) {
        for_each_permutation(count_cycles(p1), [&](const std::vector<int>& p2) { count += count_cycles(p2) == m; });
    });
    return count;
}

} // namespace oracle_detail

/**
 * Exact count of the structures of `kind` on an n-set with parameter m,
 * by exhaustive generation. Throws ResourceLimitError above the bound.
 */
inline Integer oracle_count(StructureKind kind, std::size_t n, std::size_t m, const OracleLimits& limits = {}) {
    if (m > n) throw RangeError("oracle_count: m > n");
    if (n > limits.bound(kind)) {
        throw ResourceLimitError("oracle_count: n = " + std::to_string(n) + " exceeds the enumeration bound " +
                                 std::to_string(limits.bound(kind)) + " for " + std::string(structure_name(kind)));
    }
    using namespace oracle_detail;
    const int ni = static_cast<int>(n);
    const int mi = static_cast<int>(m);
    switch (kind) {
    case StructureKind::SetPartitions: return count_set_partitions(ni, mi);
    case StructureKind::CyclePermutations: return count_cycle_permutations(ni, mi);
    case StructureKind::ListPartitions: return count_list_partitions(ni, mi);
    case StructureKind::NestedSubsets: return count_nested_subsets(ni, mi);
    case StructureKind::RefinementPairs: return count_refinement_pairs(ni, mi);
    case StructureKind::ListRefinementPairs: return count_list_refinement_pairs(ni, mi);
    case StructureKind::ColoredPartitions: return count_colored_partitions(ni, mi);
    case StructureKind::SubsetCyclePermutations: return count_subset_cycle_permutations(ni, mi);
    case StructureKind::PartitionPermutationPairs: return count_partition_permutation_pairs(ni, mi);
    case StructureKind::PermutationPairs: return count_permutation_pairs(ni, mi);
    }
    return 0;
}

/**
 * Non-attacking placements of k wrooks on the staircase board with row
 * lengths 0, 1, ..., n-1. A wrook only attacks along its row, so a
 * placement picks k distinct rows and one cell in each.
 */
inline Integer wrook_placements(std::size_t n, std::size_t k) {
    std::function<std::uint64_t(std::size_t, std::size_t)> place = [&](std::size_t row, std::size_t left) {
        if (left == 0) return std::uint64_t{1};
        if (row == n) return std::uint64_t{0};
        std::uint64_t total = place(row + 1, left); // row stays empty
        for (std::size_t cell = 0; cell < row; ++cell) total += place(row + 1, left - 1);
        return total;
    };
    return place(0, k);
}

} // namespace stirmat
