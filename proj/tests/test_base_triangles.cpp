#include <gtest/gtest.h>

#include "stirmat/stirmat.hpp"

using namespace stirmat;

TEST(BaseTriangles, SmallRows) {
    EXPECT_EQ(base_triangle(TriangleKind::Stirling2, 3), (Triangle{{1}, {0, 1}, {0, 1, 1}, {0, 1, 3, 1}}));
    EXPECT_EQ(base_triangle(TriangleKind::Stirling1, 3), (Triangle{{1}, {0, 1}, {0, 1, 1}, {0, 2, 3, 1}}));
    EXPECT_EQ(base_triangle(TriangleKind::Lah, 3), (Triangle{{1}, {0, 1}, {0, 2, 1}, {0, 6, 6, 1}}));
    EXPECT_EQ(base_triangle(TriangleKind::Binomial, 0), (Triangle{{1}}));
}

// Expected values are the brute-force counts from the oracles.
TEST(BaseTriangles, EntriesAgreeWithEnumeration) {
    EXPECT_EQ(base_triangle(TriangleKind::Stirling2, 4)(4, 2), 7);
    EXPECT_EQ(oracle_count(StructureKind::SetPartitions, 4, 2), 7);
    EXPECT_EQ(base_triangle(TriangleKind::Stirling1, 4)(4, 2), 11);
    EXPECT_EQ(oracle_count(StructureKind::CyclePermutations, 4, 2), 11);
    EXPECT_EQ(base_triangle(TriangleKind::Lah, 4)(4, 2), 36);
    EXPECT_EQ(oracle_count(StructureKind::ListPartitions, 4, 2), 36);
    EXPECT_EQ(base_triangle(TriangleKind::Lah, 3)(3, 0), 0);
}

TEST(BaseTriangles, BoundariesAndSigns) {
    for (auto kind : all_triangle_kinds) {
        const auto t = base_triangle(kind, 15);
        for (std::size_t n = 0; n < t.order(); ++n) {
            EXPECT_EQ(t(n, n), 1);
            const int col0 = (kind == TriangleKind::Binomial || n == 0) ? 1 : 0;
            EXPECT_EQ(t(n, 0), col0) << kind_name(kind) << " row " << n;
            for (std::size_t m = 0; m <= n; ++m) EXPECT_GE(t(n, m), 0);
        }
    }
}

TEST(BaseTriangles, LahClosedForm) {
    EXPECT_EQ(lah_closed(4, 2), 36);
    EXPECT_EQ(lah_closed(3, 3), 1);
    EXPECT_EQ(lah_closed(3, 1), 6);
    EXPECT_EQ(lah_closed(0, 0), 1);
    EXPECT_EQ(lah_closed(5, 0), 0);
    EXPECT_THROW(lah_closed(2, 3), RangeError);

    const auto lah = base_triangle(TriangleKind::Lah, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
        for (std::size_t m = 0; m <= n; ++m) ASSERT_EQ(lah(n, m), lah_closed(n, m)) << n << "," << m;
    }
}

TEST(BaseTriangles, Sequences) {
    auto ints = [](std::initializer_list<long long> v) { return std::vector<Integer>(v.begin(), v.end()); };
    EXPECT_EQ(sequence(SequenceKind::Bell, 5), ints({1, 1, 2, 5, 15, 52}));
    EXPECT_EQ(sequence(SequenceKind::Fubini, 4), ints({1, 1, 3, 13, 75}));
    EXPECT_EQ(sequence(SequenceKind::TotalLists, 3), ints({1, 2, 5, 16}));
    EXPECT_EQ(sequence(SequenceKind::Power3, 3), ints({1, 3, 9, 27}));
    EXPECT_EQ(sequence(SequenceKind::Factorial, 5), ints({1, 1, 2, 6, 24, 120}));
    EXPECT_EQ(sequence(SequenceKind::Power2, 4), ints({1, 2, 4, 8, 16}));
    EXPECT_EQ(sequence(SequenceKind::LahTotal, 5), ints({1, 1, 3, 13, 73, 501}));
    EXPECT_EQ(sequence(SequenceKind::OrderedCycleFactorizations, 4), ints({1, 1, 3, 14, 88}));
    EXPECT_EQ(sequence(SequenceKind::ColoredPartitions, 4), ints({1, 2, 6, 22, 94}));
    EXPECT_EQ(sequence(SequenceKind::PartitionPairs, 5), ints({1, 1, 3, 12, 60, 358}));
    for (auto kind : all_sequence_kinds) EXPECT_EQ(sequence(kind, 0), ints({1})) << sequence_name(kind);
}

TEST(BaseTriangles, BellAndFactorialMatchEnumeration) {
    const auto bell = sequence(SequenceKind::Bell, 7);
    const auto fact = sequence(SequenceKind::Factorial, 7);
    for (std::size_t n = 0; n <= 7; ++n) {
        Integer partitions = 0;
        Integer perms = 0;
        for (std::size_t m = 0; m <= n; ++m) {
            partitions += oracle_count(StructureKind::SetPartitions, n, m);
            perms += oracle_count(StructureKind::CyclePermutations, n, m);
        }
        EXPECT_EQ(bell[n], partitions);
        EXPECT_EQ(fact[n], perms);
    }
}

TEST(BaseTriangles, KindNamesRoundTrip) {
    for (auto kind : all_triangle_kinds) {
        EXPECT_EQ(parse_kind(kind_name(kind)), kind);
        EXPECT_EQ(parse_kind(kind_symbol(kind)), kind);
    }
    EXPECT_FALSE(parse_kind("fibonacci").has_value());
}
