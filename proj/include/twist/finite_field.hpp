#pragma once

// Arithmetic in F_p and F_{p^r} for small p >= 5, with elements stored as
// coefficient vectors modulo a deterministic monic irreducible polynomial.
// Fields are interned: FiniteField::get(p, r) always returns the same object,
// so elements can refer to their field by address.

#include <array>
#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "twist/intmath.hpp"

namespace twist::ff {

using u64 = std::uint64_t;

inline constexpr unsigned kMaxDegree = 12;
inline constexpr u64 kEnumerationLimit = 100000;

class FieldElement;

/// Smallest monic polynomial of degree r that is irreducible over F_p, where
/// "smallest" reads the lower coefficients as a base-p integer with the constant
/// term least significant. r <= 3 uses the rootless test; larger r uses Rabin's test.
/// For r = 1 returns x. Coefficients ascending, leading 1 included.
std::vector<u64> find_irreducible(u64 p, unsigned r);

class FiniteField {
public:
    /// Interned field of order p^degree. Rejects p < 5, composite p, degree 0,
    /// degree > kMaxDegree, and orders beyond 2^62.
    static const FiniteField& get(u64 p, unsigned degree);

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

    u64 characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return r_; }
    u64 order() const noexcept { return q_; }
    const std::vector<u64>& modulus() const noexcept { return modulus_; }
    /// Factorization of q - 1, cached.
    const intmath::Factorization& unit_order_factors() const noexcept { return unit_factors_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement constant(std::int64_t value) const;
    /// Coefficients in ascending powers; at most degree() of them, each reduced mod p.
    FieldElement from_coefficients(std::span<const u64> coeffs) const;
    /// The index-th element in lexicographic order (base-p digits, constant term least significant).
    FieldElement element(u64 index) const;

    /// All q elements in index order. Throws std::length_error past kEnumerationLimit.
    std::vector<FieldElement> elements() const;

    /// Generator of the multiplicative group: the smallest-index element of order q - 1.
    FieldElement primitive_element() const;

    std::string name() const;

private:
    FiniteField(u64 p, unsigned r);

    u64 p_;
    unsigned r_;
    u64 q_;
    std::vector<u64> modulus_;
    intmath::Factorization unit_factors_;
    mutable std::once_flag primitive_once_;
    mutable std::array<std::uint32_t, kMaxDegree> primitive_{};

    friend class FieldElement;
};

class FieldElement {
public:
    const FiniteField& field() const noexcept { return *field_; }
    std::span<const std::uint32_t> coefficients() const noexcept { return {c_.data(), field_->degree()}; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// Position in FiniteField::element order.
    u64 index() const noexcept;

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& other) const;
    /// Throws DivisionByZero when other is zero.
    FieldElement operator/(const FieldElement& other) const;

    FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
    FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
    FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }

    /// Extended-Euclid inverse; throws DivisionByZero on zero.
    FieldElement inverse() const;
    FieldElement pow(u64 exponent) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

    /// Polynomial in x with descending powers, e.g. "2x+3"; plain integers for prime fields.
    std::string to_string() const;

private:
    explicit FieldElement(const FiniteField* field) noexcept : field_(field) {}
    void require_same_field(const FieldElement& other) const;

    const FiniteField* field_;
    std::array<std::uint32_t, kMaxDegree> c_{};

    friend class FiniteField;
};

enum class ArithOp { add, sub, mul, div };
FieldElement ff_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

std::vector<FieldElement> enumerate_elements(const FiniteField& field);

/// Least t >= 1 with a^t = 1. Throws std::invalid_argument on zero.
u64 multiplicative_order(const FieldElement& a);

/// Whether a = u^m for some u in a's field. Throws std::invalid_argument on zero.
bool is_mth_power(const FieldElement& a, u64 m);

/// Number of m-th roots of unity in F_q: gcd(m, q - 1).
u64 mu_m_size(u64 q, u64 m);

/// Image of a under the fixed embedding of a's field into `big`. The embedding
/// sends x to the smallest-index root of a's modulus in `big`; it is computed
/// once per field pair and cached.
FieldElement embed(const FieldElement& a, const FiniteField& big);

}  // namespace twist::ff
