#include "twist/intmath.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace twist::intmath {

namespace {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

void require_prime(u64 p, const char* where) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::string(where) + ": modulus " + std::to_string(p) +
                                    " is not prime");
    }
}

void require_positive(u64 n, const char* where) {
    if (n == 0) {
        throw std::invalid_argument(std::string(where) + ": argument must be positive");
    }
}

u64 magnitude(i64 a) noexcept {
    return a < 0 ? static_cast<u64>(-(a + 1)) + 1 : static_cast<u64>(a);
}

i64 narrow(i128 v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<i64>(v);
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].exponent == 0 || !is_prime(pairs_[i].prime)) {
            throw std::invalid_argument("Factorization: entries must be primes with positive exponent");
        }
        if (i > 0 && pairs_[i - 1].prime >= pairs_[i].prime) {
            throw std::invalid_argument("Factorization: primes must be strictly ascending");
        }
    }
}

u64 Factorization::value() const {
    u64 result = 1;
    for (const auto& [p, e] : pairs_) {
        const u64 pe = checked_pow(p, e);
        if (result > std::numeric_limits<u64>::max() / pe) {
            throw std::overflow_error("Factorization::value overflow");
        }
        result *= pe;
    }
    return result;
}

unsigned Valuation::value() const {
    if (infinite_) {
        throw std::logic_error("Valuation::value on infinite valuation");
    }
    return value_;
}

std::string Valuation::to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
}

u64 gcd(u64 a, u64 b) noexcept {
    while (b != 0) {
        const u64 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (u64 f = 5; f <= n / f; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    require_positive(n, "factorize");
    std::vector<PrimePower> pairs;
    for (u64 f = 2; f <= n / f; f += (f == 2 ? 1 : 2)) {
        if (n % f != 0) continue;
        unsigned e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        pairs.push_back({f, e});
    }
    if (n > 1) pairs.push_back({n, 1});
    return Factorization(std::move(pairs));
}

Valuation valuation(i64 a, u64 p) {
    require_prime(p, "valuation");
    if (a == 0) return Valuation::infinite();
    u64 m = magnitude(a);
    unsigned v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return Valuation(v);
}

unsigned capped_valuation(i64 a, u64 p, unsigned cap) {
    const Valuation v = valuation(a, p);
    return v.is_infinite() ? cap : std::min(v.value(), cap);
}

u64 euler_phi(u64 n) {
    require_positive(n, "euler_phi");
    u64 result = n;
    for (const auto& [p, e] : factorize(n)) {
        result = result / p * (p - 1);
    }
    return result;
}

int moebius(u64 n) {
    require_positive(n, "moebius");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<u64> divisors(u64 n) {
    require_positive(n, "divisors");
    std::vector<u64> result{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = result.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * pk);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

u64 reduce(i64 a, u64 m) {
    require_positive(m, "reduce");
    const u64 r = magnitude(a) % m;
    return (a < 0 && r != 0) ? m - r : r;
}

u64 add_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>((static_cast<u128>(a) + b) % m);
}

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(i64 base, u64 exp, u64 m) {
    require_positive(m, "pow_mod");
    u64 b = reduce(base, m);
    u64 result = 1 % m;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1U;
    }
    return result;
}

u64 geom_sum_mod(i64 s, u64 d, u64 m) {
    require_positive(d, "geom_sum_mod");
    require_positive(m, "geom_sum_mod");
    const u64 base = reduce(s, m);
    // Walk the bits of d from the top, maintaining sum = 1 + s + ... + s^(k-1) and power = s^k.
    u64 sum = 0;
    u64 power = 1 % m;
    for (int bit = 63 - __builtin_clzll(d); bit >= 0; --bit) {
        sum = add_mod(sum, mul_mod(sum, power, m), m);  // k -> 2k
        power = mul_mod(power, power, m);
        if ((d >> bit) & 1U) {  // 2k -> 2k + 1
            sum = add_mod(sum, power, m);
            power = mul_mod(power, base, m);
        }
    }
    return sum;
}

u64 checked_pow(u64 base, unsigned exp) {
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<u64>::max() / base) {
            throw std::overflow_error("checked_pow: " + std::to_string(base) + "^" +
                                      std::to_string(exp) + " exceeds 64 bits");
        }
        result *= base;
    }
    return result;
}

Rational::Rational(i64 numerator, i64 denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    if (denominator < 0) {
        numerator = narrow(-static_cast<i128>(numerator));
        denominator = narrow(-static_cast<i128>(denominator));
    }
    const auto g = static_cast<i64>(gcd(magnitude(numerator), static_cast<u64>(denominator)));
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(narrow(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_),
                    narrow(static_cast<i128>(a.den_) * b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(narrow(-static_cast<i128>(b.num_)), b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(narrow(static_cast<i128>(a.num_) * b.num_),
                    narrow(static_cast<i128>(a.den_) * b.den_));
}

std::string Rational::to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    try {
        std::size_t used = 0;
        const auto slash = text.find('/');
        const i64 num = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument("");
        if (slash == std::string::npos) return Rational(num);
        const std::string den_text = text.substr(slash + 1);
        const i64 den = std::stoll(den_text, &used);
        if (used != den_text.size() || den <= 0) throw std::invalid_argument("");
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("Rational::parse: malformed value '" + text + "'");
    }
}

Rational rational_pow(u64 p, i64 exponent) {
    const u64 magnitude_power = checked_pow(p, static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (magnitude_power > static_cast<u64>(std::numeric_limits<i64>::max())) {
        throw std::overflow_error("rational_pow overflow");
    }
    const auto v = static_cast<i64>(magnitude_power);
    return exponent >= 0 ? Rational(v) : Rational(1, v);
}

}  // namespace twist::intmath
