#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stirmat/base_triangles.hpp"
#include "stirmat/composites.hpp"
#include "stirmat/errors.hpp"
#include "stirmat/integer.hpp"
#include "stirmat/triangle.hpp"

namespace stirmat {

/**
 * Dense integer polynomial in the power basis; coefficient i multiplies
 * x^i. Trailing zeros are stripped on construction, so the zero
 * polynomial has no coefficients and equality is coefficient-wise.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }
    Polynomial(std::initializer_list<long long> coefficients) : coeffs_(coefficients.begin(), coefficients.end()) {
        normalize();
    }

    static Polynomial monomial(std::size_t degree) {
        std::vector<Integer> c(degree + 1, Integer(0));
        c[degree] = 1;
        return Polynomial(std::move(c));
    }

    // x + shift
    static Polynomial linear(long long shift) { return Polynomial({shift, 1}); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as 0.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<Integer> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Integer(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
        for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Integer> c(p.coeffs_.size() + q.coeffs_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Integer& s, const Polynomial& p) {
        std::vector<Integer> c = p.coeffs_;
        for (auto& v : c) v *= s;
        return Polynomial(std::move(c));
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

inline Polynomial derivative(const Polynomial& p) {
    std::vector<Integer> c;
    for (std::size_t i = 1; i < p.coefficients().size(); ++i) c.push_back(i * p.coefficients()[i]);
    return Polynomial(std::move(c));
}

// p(q(x)) by Horner's rule.
inline Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * q + Polynomial(std::vector<Integer>{*it});
    return out;
}

// Replace x^k by basis[k] in p; basis must cover deg p.
inline Polynomial substitute_basis(const Polynomial& p, const std::vector<Polynomial>& basis) {
    Polynomial out;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) out = out + p.coefficients()[k] * basis.at(k);
    return out;
}

enum class BasisFamily {
    Power,        // x^n
    Falling,      // x(x-1)...(x-n+1)
    Rising,       // x(x+1)...(x+n-1)
    Shift1,       // (1+x)^n
    Shift2,       // (2+x)^n
    BinomRising,  // sum_k C(n,k) x^{rising k}
    Bell,         // B_n(x) = sum_k {n,k} x^k
    BellShift1,   // B_n(1+x)
    S2Rising,     // sum_k {n,k} x^{rising k}
    S1Rising,     // sum_k [n,k] x^{rising k}
    S1Shift1,     // sum_k [n,k] (1+x)^k
};

constexpr std::string_view family_name(BasisFamily f) {
    switch (f) {
    case BasisFamily::Power: return "power";
    case BasisFamily::Falling: return "falling";
    case BasisFamily::Rising: return "rising";
    case BasisFamily::Shift1: return "shift1";
    case BasisFamily::Shift2: return "shift2";
    case BasisFamily::BinomRising: return "binom-rising";
    case BasisFamily::Bell: return "bell";
    case BasisFamily::BellShift1: return "bell-shift1";
    case BasisFamily::S2Rising: return "s2-rising";
    case BasisFamily::S1Rising: return "s1-rising";
    case BasisFamily::S1Shift1: return "s1-shift1";
    }
    return "?";
}

/**
 * Members 0..max_index of a basis family, in the power basis.
 *
 * Nothing here reads a triangle: Bell polynomials come from the Touchard
 * recurrence B_{n+1}(x) = x (B_n(x) + B_n'(x)), and the mixed families
 * are built by substituting rising factorials or 1+x into polynomials
 * whose power coefficients are the wanted numbers (x^{rising n} for [n,k],
 * B_n(x) for {n,k}, (1+x)^n for C(n,k)).
 */
inline std::vector<Polynomial> family_members(BasisFamily family, std::size_t max_index) {
    const auto count = max_index + 1;
    auto product_family = [count](long long step) {
        std::vector<Polynomial> out{Polynomial({1})};
        for (std::size_t n = 1; n < count; ++n) {
            out.push_back(out.back() * Polynomial::linear(step * static_cast<long long>(n - 1)));
        }
        return out;
    };
    auto power_family = [count](const Polynomial& base) {
        std::vector<Polynomial> out{Polynomial({1})};
        for (std::size_t n = 1; n < count; ++n) out.push_back(out.back() * base);
        return out;
    };
    auto bell_family = [count] {
        std::vector<Polynomial> out{Polynomial({1})};
        const auto x = Polynomial::monomial(1);
        for (std::size_t n = 1; n < count; ++n) out.push_back(x * (out.back() + derivative(out.back())));
        return out;
    };
    auto substituted = [](const std::vector<Polynomial>& source, const std::vector<Polynomial>& basis) {
        std::vector<Polynomial> out;
        for (const auto& p : source) out.push_back(substitute_basis(p, basis));
        return out;
    };

    switch (family) {
    case BasisFamily::Power: return power_family(Polynomial::monomial(1));
    case BasisFamily::Falling: return product_family(-1);
    case BasisFamily::Rising: return product_family(1);
    case BasisFamily::Shift1: return power_family(Polynomial::linear(1));
    case BasisFamily::Shift2: return power_family(Polynomial::linear(2));
    case BasisFamily::BinomRising: return substituted(power_family(Polynomial::linear(1)), product_family(1));
    case BasisFamily::Bell: return bell_family();
    case BasisFamily::BellShift1: {
        std::vector<Polynomial> out;
        for (const auto& b : bell_family()) out.push_back(compose(b, Polynomial::linear(1)));
        return out;
    }
    case BasisFamily::S2Rising: return substituted(bell_family(), product_family(1));
    case BasisFamily::S1Rising: return substituted(product_family(1), product_family(1));
    case BasisFamily::S1Shift1: return substituted(product_family(1), power_family(Polynomial::linear(1)));
    }
    return {};
}

inline Polynomial family_member(BasisFamily family, std::size_t n) { return family_members(family, n).back(); }

/**
 * Coefficients c_m with p = sum_m c_m x^{falling m}. Dividing by x - d
 * for d = 0, 1, 2, ... peels off c_d as the remainder (Newton form with
 * nodes 0, 1, 2, ...). Synthetic division by a monic linear factor never
 * leaves the integers.
 */
inline std::vector<Integer> to_falling_basis(const Polynomial& p) {
    std::vector<Integer> rest = p.coefficients();
    std::vector<Integer> out;
    for (long long d = 0; !rest.empty(); ++d) {
        // rest = (x - d) * q + r
        std::vector<Integer> q(rest.size() - 1);
        Integer carry = 0;
        for (std::size_t i = rest.size(); i-- > 0;) {
            Integer value = rest[i] + carry * d;
            if (i == 0) {
                out.push_back(value);
            } else {
                q[i - 1] = value;
                carry = value;
            }
        }
        rest = Polynomial(std::move(q)).coefficients();
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// sum_m c_m x^{falling m} expanded in the power basis.
inline Polynomial from_falling_basis(const std::vector<Integer>& coefficients) {
    if (coefficients.empty()) return {};
    const auto falling = family_members(BasisFamily::Falling, coefficients.size() - 1);
    Polynomial out;
    for (std::size_t m = 0; m < coefficients.size(); ++m) out = out + coefficients[m] * falling[m];
    return out;
}

enum class TargetBasis { Power, Falling };

// The triangle a basis change is expected to reproduce.
struct BasisExpectation {
    std::optional<TriangleKind> base;
    std::optional<Pair> composite;

    Triangle build(std::size_t max_row) const {
        return base ? base_triangle(*base, max_row) : composite_product(*composite, max_row);
    }
};

struct BasisChange {
    BasisFamily family;
    TargetBasis target;
    BasisExpectation expected;
};

inline const std::array<BasisChange, 11>& basis_registry() {
    using F = BasisFamily;
    using T = TargetBasis;
    using K = TriangleKind;
    static const std::array<BasisChange, 11> registry{{
        {F::Power, T::Falling, {K::Stirling2, std::nullopt}},
        {F::Rising, T::Power, {K::Stirling1, std::nullopt}},
        {F::Rising, T::Falling, {K::Lah, std::nullopt}},
        {F::Shift1, T::Falling, {std::nullopt, pairs::CS2}},
        {F::Shift2, T::Power, {std::nullopt, pairs::CC}},
        {F::BinomRising, T::Power, {std::nullopt, pairs::CS1}},
        {F::Bell, T::Falling, {std::nullopt, pairs::S2S2}},
        {F::S2Rising, T::Power, {std::nullopt, pairs::S2S1}},
        {F::S1Rising, T::Power, {std::nullopt, pairs::S1S1}},
        {F::BellShift1, T::Power, {std::nullopt, pairs::S2C}},
        {F::S1Shift1, T::Power, {std::nullopt, pairs::S1C}},
    }};
    return registry;
}

inline const BasisChange* find_basis_change(BasisFamily family, TargetBasis target) {
    for (const auto& entry : basis_registry()) {
        if (entry.family == family && entry.target == target) return &entry;
    }
    return nullptr;
}

/**
 * Row n holds the coefficients of family member n in the target basis.
 * Only the registered (family, target) combinations are accepted.
 */
inline Triangle change_matrix(BasisFamily family, TargetBasis target, std::size_t max_row) {
    if (find_basis_change(family, target) == nullptr) {
        throw UnsupportedError("change_matrix: no registered change from " + std::string(family_name(family)) +
                               " to " + (target == TargetBasis::Power ? "power" : "falling"));
    }
    const auto members = family_members(family, max_row);
    Triangle t(max_row + 1);
    for (std::size_t n = 0; n <= max_row; ++n) {
        auto coeffs = target == TargetBasis::Power ? members[n].coefficients() : to_falling_basis(members[n]);
        if (coeffs.size() > n + 1) {
            throw ConsistencyError("change_matrix: member " + std::to_string(n) + " has degree above " +
                                   std::to_string(n));
        }
        for (std::size_t m = 0; m < coeffs.size(); ++m) t(n, m) = coeffs[m];
    }
    return t;
}

} // namespace stirmat
