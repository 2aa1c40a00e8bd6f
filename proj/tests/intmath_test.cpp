#include <doctest.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "twist/intmath.hpp"

using namespace twist::intmath;

TEST_CASE("gcd examples and zero convention") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(7, 0) == 7);
    CHECK(gcd(1, 999) == 1);
    CHECK(gcd(0, 0) == 0);
}

TEST_CASE("factorize") {
    CHECK(factorize(360).pairs() == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(1).empty());
    CHECK(factorize(97).pairs() == std::vector<PrimePower>{{97, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK(factorize(4294967291ULL).pairs() == std::vector<PrimePower>{{4294967291ULL, 1}});
}

TEST_CASE("factorize reconstructs n up to 10^4") {
    for (u64 n = 1; n <= 10000; ++n) {
        const Factorization f = factorize(n);
        REQUIRE(f.value() == n);
        for (const auto& [p, e] : f) REQUIRE(is_prime(p));
    }
}

TEST_CASE("Factorization rejects malformed input") {
    CHECK_THROWS_AS(Factorization({{4, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Factorization({{3, 1}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Factorization({{2, 0}}), std::invalid_argument);
}

TEST_CASE("valuation") {
    CHECK(valuation(40, 2) == Valuation(3));
    CHECK(valuation(40, 3) == Valuation(0));
    CHECK(valuation(0, 5).is_infinite());
    CHECK(valuation(-24, 2) == Valuation(3));
    CHECK(Valuation::infinite() > Valuation(1000));
    CHECK(Valuation::infinite().to_string() == "inf");
    CHECK_THROWS_AS(Valuation::infinite().value(), std::logic_error);
    CHECK_THROWS_AS(valuation(12, 4), std::invalid_argument);
}

TEST_CASE("capped_valuation") {
    CHECK(capped_valuation(4, 2, 1) == 1);
    CHECK(capped_valuation(0, 2, 3) == 3);
    CHECK(capped_valuation(6, 3, 5) == 1);
}

TEST_CASE("capped_valuation is min(valuation, cap)") {
    for (i64 a = -100; a <= 100; ++a) {
        for (u64 p : {2, 3, 5, 7}) {
            for (unsigned c = 0; c <= 6; ++c) {
                const Valuation v = valuation(a, p);
                const unsigned expected = v > Valuation(c) ? c : v.value();
                REQUIRE(capped_valuation(a, p, c) == expected);
            }
        }
    }
}

TEST_CASE("euler_phi and moebius") {
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(7) == 6);
    CHECK(moebius(1) == 1);
    CHECK(moebius(30) == -1);
    CHECK(moebius(12) == 0);
}

TEST_CASE("divisor sums of phi and mu") {
    for (u64 n = 1; n <= 2000; ++n) {
        u64 phi_sum = 0;
        int mu_sum = 0;
        for (u64 d : divisors(n)) {
            phi_sum += euler_phi(d);
            mu_sum += moebius(d);
        }
        REQUIRE(phi_sum == n);
        REQUIRE(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(8) == std::vector<u64>{1, 2, 4, 8});
    for (u64 n = 1; n <= 500; ++n) {
        const auto ds = divisors(n);
        REQUIRE(std::is_sorted(ds.begin(), ds.end()));
        u64 count = 0;
        for (u64 d = 1; d <= n; ++d) count += n % d == 0;
        REQUIRE(ds.size() == count);
    }
}

TEST_CASE("pow_mod and geom_sum_mod examples") {
    CHECK(pow_mod(3, 8, 8) == 1);
    CHECK(pow_mod(5, 0, 7) == 1);
    CHECK(pow_mod(5, 3, 6) == 5);
    CHECK(pow_mod(-2, 3, 7) == 6);
    CHECK(pow_mod(5, 0, 1) == 0);
    CHECK(geom_sum_mod(5, 2, 6) == 0);
    CHECK(geom_sum_mod(3, 4, 8) == 0);
    CHECK(geom_sum_mod(11, 1, 7) == 1);
    CHECK(geom_sum_mod(11, 1, 1) == 0);
}

TEST_CASE("pow_mod and geom_sum_mod match naive loops") {
    for (u64 s = 1; s <= 50; ++s) {
        for (u64 m = 1; m <= 50; ++m) {
            u64 power = 1 % m;
            u64 sum = 0;
            for (u64 d = 1; d <= 20; ++d) {
                sum = (sum + power) % m;
                power = power * s % m;
                REQUIRE(geom_sum_mod(static_cast<i64>(s), d, m) == sum);
                REQUIRE(pow_mod(static_cast<i64>(s), d, m) == power);
            }
        }
    }
}

TEST_CASE("modular helpers near 2^64 do not wrap") {
    const u64 m = std::numeric_limits<u64>::max() - 58;  // largest 64-bit prime
    CHECK(add_mod(m - 1, m - 1, m) == m - 2);
    CHECK(mul_mod(m - 1, m - 1, m) == 1);
    CHECK(pow_mod(2, m - 1, m) == 1);
    CHECK(geom_sum_mod(1, 5, m) == 5);
}

TEST_CASE("checked_pow overflow is an error") {
    CHECK(checked_pow(2, 63) == (u64{1} << 63));
    CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
    CHECK(checked_pow(0, 0) == 1);
}

TEST_CASE("Rational") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, 3).to_string() == "2/3");
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational::parse("2/3") == Rational(2, 3));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(rational_pow(2, -2) == Rational(1, 4));
    CHECK(rational_pow(3, 0) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(std::numeric_limits<i64>::max()) * Rational(2), std::overflow_error);
    for (i64 a = -20; a <= 20; ++a) {
        for (i64 b = 1; b <= 20; ++b) REQUIRE(Rational::parse(Rational(a, b).to_string()) == Rational(a, b));
    }
}
