#pragma once

// Exact integer and modular primitives. Every routine works on 64-bit operands
// with 128-bit intermediates; anything that would overflow throws
// std::overflow_error instead of wrapping.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace twist::intmath {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime decomposition, sorted ascending by prime. Empty for 1.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> pairs);

    const std::vector<PrimePower>& pairs() const noexcept { return pairs_; }
    bool empty() const noexcept { return pairs_.empty(); }
    std::size_t size() const noexcept { return pairs_.size(); }
    auto begin() const noexcept { return pairs_.begin(); }
    auto end() const noexcept { return pairs_.end(); }

    /// Multiplies the factorization back out.
    u64 value() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> pairs_;
};

/// p-adic valuation; infinite only for the valuation of zero.
class Valuation {
public:
    constexpr explicit Valuation(unsigned value) noexcept : value_(value), infinite_(false) {}
    static constexpr Valuation infinite() noexcept { return Valuation(); }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    /// Throws std::logic_error on the infinite valuation.
    unsigned value() const;

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept {
        if (a.infinite_ || b.infinite_) {
            return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
        }
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

private:
    constexpr Valuation() noexcept : value_(0), infinite_(true) {}
    unsigned value_;
    bool infinite_;
};

u64 gcd(u64 a, u64 b) noexcept;

/// Deterministic trial division. Cost is O(sqrt(n)).
bool is_prime(u64 n) noexcept;

Factorization factorize(u64 n);

Valuation valuation(i64 a, u64 p);
unsigned capped_valuation(i64 a, u64 p, unsigned cap);

u64 euler_phi(u64 n);
int moebius(u64 n);

/// All positive divisors of n in ascending order.
std::vector<u64> divisors(u64 n);

/// Canonical residue of a in [0, m).
u64 reduce(i64 a, u64 m);
u64 add_mod(u64 a, u64 b, u64 m) noexcept;
u64 mul_mod(u64 a, u64 b, u64 m) noexcept;
u64 pow_mod(i64 base, u64 exp, u64 m);

/// (1 + s + ... + s^(d-1)) mod m without dividing by s - 1.
u64 geom_sum_mod(i64 s, u64 d, u64 m);

/// base^exp, throwing std::overflow_error if the result does not fit in 64 bits.
u64 checked_pow(u64 base, unsigned exp);

/// Exact rational with positive denominator, kept in lowest terms.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(i64 integer) noexcept : num_(integer) {}  // NOLINT(google-explicit-constructor)
    Rational(i64 numerator, i64 denominator);

    i64 numerator() const noexcept { return num_; }
    i64 denominator() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;

    /// "7" or "2/3".
    std::string to_string() const;
    /// Inverse of to_string; throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& text);

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

/// p^e for a possibly negative exponent.
Rational rational_pow(u64 p, i64 exponent);

}  // namespace twist::intmath
