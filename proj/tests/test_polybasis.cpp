#include <gtest/gtest.h>

#include "stirmat/stirmat.hpp"

using namespace stirmat;

namespace {
std::vector<Integer> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }
} // namespace

TEST(Polynomial, Arithmetic) {
    EXPECT_EQ(poly_mul({0, 1}, {1, 1}), Polynomial({0, 1, 1}));
    const Polynomial p{3, -2, 0, 5};
    EXPECT_EQ(poly_add(p, Polynomial{}), p);
    EXPECT_EQ(poly_mul(p, {1}), p);
    EXPECT_EQ(poly_mul(p, Polynomial{}), Polynomial{});
    EXPECT_EQ(poly_add(p, Polynomial{-3, 2, 0, -5}), Polynomial{});
}

TEST(Polynomial, TrailingZerosDoNotAffectEquality) {
    EXPECT_EQ(Polynomial({1, 2, 0, 0}), Polynomial({1, 2}));
    EXPECT_TRUE(Polynomial({0, 0}).is_zero());
    EXPECT_EQ(Polynomial({0, 0}).coefficients().size(), 0u);
}

TEST(Polynomial, ComposeAndDerivative) {
    // (x^2)(1+x) = 1 + 2x + x^2
    EXPECT_EQ(compose({0, 0, 1}, Polynomial::linear(1)), Polynomial({1, 2, 1}));
    EXPECT_EQ(derivative({5, 3, 0, 2}), Polynomial({3, 0, 6}));
}

TEST(PolyBasis, FamilyMembers) {
    EXPECT_EQ(family_member(BasisFamily::Rising, 3), Polynomial({0, 2, 3, 1}));
    EXPECT_EQ(family_member(BasisFamily::Falling, 3), Polynomial({0, 2, -3, 1}));
    EXPECT_EQ(family_member(BasisFamily::Shift2, 2), Polynomial({4, 4, 1}));
    EXPECT_EQ(family_member(BasisFamily::Bell, 3), Polynomial({0, 1, 3, 1}));
    // sum_k C(2,k) x^{rising k} = 1 + 2x + x(x+1)
    EXPECT_EQ(family_member(BasisFamily::BinomRising, 2), Polynomial({1, 3, 1}));
    // B_2(1+x) = (1+x) + (1+x)^2
    EXPECT_EQ(family_member(BasisFamily::BellShift1, 2), Polynomial({2, 3, 1}));
    for (auto f : {BasisFamily::Power, BasisFamily::Falling, BasisFamily::Rising, BasisFamily::Shift1,
                   BasisFamily::Shift2, BasisFamily::BinomRising, BasisFamily::Bell, BasisFamily::BellShift1,
                   BasisFamily::S2Rising, BasisFamily::S1Rising, BasisFamily::S1Shift1}) {
        EXPECT_EQ(family_member(f, 0), Polynomial({1})) << family_name(f);
    }
}

TEST(PolyBasis, ToFallingBasis) {
    EXPECT_EQ(to_falling_basis({0, 0, 1}), ints({0, 1, 1}));
    EXPECT_EQ(to_falling_basis({1}), ints({1}));
    EXPECT_TRUE(to_falling_basis(Polynomial{}).empty());
    for (std::size_t n = 0; n <= 8; ++n) {
        std::vector<Integer> unit(n + 1, Integer(0));
        unit[n] = 1;
        EXPECT_EQ(to_falling_basis(family_member(BasisFamily::Falling, n)), unit);
    }
}

TEST(PolyBasis, FallingRoundTripOnArbitraryPolynomials) {
    const Polynomial p{-7, 0, 13, -1, 0, 4};
    EXPECT_EQ(from_falling_basis(to_falling_basis(p)), p);
}

TEST(PolyBasis, ChangeMatrices) {
    const auto shift1 = change_matrix(BasisFamily::Shift1, TargetBasis::Falling, 2);
    EXPECT_EQ(std::vector<Integer>(shift1.row(2).begin(), shift1.row(2).end()), ints({1, 3, 1}));
    EXPECT_EQ(change_matrix(BasisFamily::Rising, TargetBasis::Power, 3), base_triangle(TriangleKind::Stirling1, 3));
    EXPECT_EQ(change_matrix(BasisFamily::Rising, TargetBasis::Falling, 12), base_triangle(TriangleKind::Lah, 12));
    EXPECT_THROW(change_matrix(BasisFamily::Shift2, TargetBasis::Falling, 3), UnsupportedError);
    EXPECT_THROW(change_matrix(BasisFamily::Falling, TargetBasis::Power, 3), UnsupportedError);
}

TEST(PolyBasis, EveryRegisteredChangeReproducesItsTriangle) {
    EXPECT_EQ(basis_registry().size(), 11u);
    for (const auto& change : basis_registry()) {
        EXPECT_EQ(change_matrix(change.family, change.target, 10), change.expected.build(10))
            << family_name(change.family);
    }
}

TEST(PolyBasis, OppositeChangeIsTheSignedInverse) {
    const auto to_falling = change_matrix(BasisFamily::Power, TargetBasis::Falling, 10);
    const auto twist_s1 = sign_twist(base_triangle(TriangleKind::Stirling1, 10));
    EXPECT_TRUE(is_identity(multiply(to_falling, twist_s1)));
    EXPECT_TRUE(is_identity(multiply(twist_s1, to_falling)));
}
