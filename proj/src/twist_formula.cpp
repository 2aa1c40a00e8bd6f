#include "twist/twist_formula.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "twist/errors.hpp"

namespace twist::formula {

using intmath::gcd;

namespace {

void require_degree(u64 d, const char* where) {
    if (d == 0) throw std::invalid_argument(std::string(where) + ": degree must be >= 1");
}

std::int64_t ord(u64 value, u64 p) {
    return static_cast<std::int64_t>(intmath::valuation(static_cast<intmath::i64>(value), p).value());
}

// Exact ord_p(1 + s + ... + s^(d-1)) of the integer value, read off the residue
// modulo the largest power of p below 2^62.
std::int64_t exact_geom_valuation(u64 s, u64 d, u64 p) {
    u64 modulus = 1;
    unsigned digits = 0;
    while (modulus <= (u64{1} << 62) / p) {
        modulus *= p;
        ++digits;
    }
    const u64 residue = intmath::geom_sum_mod(static_cast<intmath::i64>(s), d, modulus);
    if (residue == 0) {
        throw std::overflow_error("exact valuation of the geometric sum exceeds " +
                                  std::to_string(digits) + " digits base " + std::to_string(p));
    }
    return ord(residue, p);
}

}  // namespace

TwistParams::TwistParams(u64 n, u64 s) : n_(n), s_(s) {
    if (n == 0) throw std::invalid_argument("TwistParams: n must be >= 1");
    if (s == 0 || s > n) throw std::invalid_argument("TwistParams: s must lie in [1, n]");
    if (gcd(s, n) != 1) {
        throw std::invalid_argument("TwistParams: gcd(s, n) = gcd(" + std::to_string(s) + ", " +
                                    std::to_string(n) + ") is not 1");
    }
}

std::string_view to_string(ValuationConvention convention) noexcept {
    return convention == ValuationConvention::capped ? "capped" : "exact";
}

ValuationConvention parse_convention(std::string_view text) {
    if (text == "capped") return ValuationConvention::capped;
    if (text == "exact") return ValuationConvention::exact;
    throw std::invalid_argument("unknown valuation convention '" + std::string(text) + "'");
}

ValuationTriple valuation_triple(u64 p, u64 d, const TwistParams& params, ValuationConvention convention) {
    require_degree(d, "valuation_triple");
    const u64 n = params.n();
    const u64 s = params.s();
    ValuationTriple t{p, 0, 0, ord(n, p)};
    if (convention == ValuationConvention::capped) {
        t.t1 = ord(gcd((s - 1) % n, n), p);
        t.t2 = ord(gcd(intmath::geom_sum_mod(static_cast<intmath::i64>(s), d, n), n), p);
    } else {
        t.t1 = s == 1 ? kInfiniteValuation : ord(s - 1, p);
        t.t2 = exact_geom_valuation(s, d, p);
    }
    return t;
}

u64 total_twists(const TwistParams& params) {
    return gcd((params.s() - 1) % params.n(), params.n());
}

u64 kernel_size_c(u64 d, const TwistParams& params) {
    require_degree(d, "kernel_size_c");
    const u64 n = params.n();
    const auto s = static_cast<intmath::i64>(params.s());
    const u64 fixed = gcd((params.s() - 1) % n, n);
    const u64 norm_zero = gcd(intmath::geom_sum_mod(s, d, n), n);
    const u64 fixed_d = gcd((intmath::pow_mod(s, d, n) + n - 1 % n) % n, n);
    const u64 numerator = fixed * norm_zero;
    if (numerator % fixed_d != 0) {
        throw ArithmeticFault("kernel_size_c: " + std::to_string(numerator) + " / " +
                              std::to_string(fixed_d) + " is not exact");
    }
    return numerator / fixed_d;
}

u64 twist_count_moebius(u64 d, const TwistParams& params) {
    require_degree(d, "twist_count_moebius");
    if (params.n() % d != 0) return 0;
    std::int64_t sum = 0;
    for (u64 e : intmath::divisors(d)) {
        const int mu = intmath::moebius(e);
        if (mu != 0) sum += mu * static_cast<std::int64_t>(kernel_size_c(d / e, params));
    }
    if (sum < 0) {
        throw PropertyViolation("twist_count_moebius: negative count " + std::to_string(sum) +
                                " at d=" + std::to_string(d) + ", n=" + std::to_string(params.n()) +
                                ", s=" + std::to_string(params.s()));
    }
    return static_cast<u64>(sum);
}

Rational closed_form_factor(const ValuationTriple& t) {
    using std::min;
    const std::int64_t first = min(t.t1, t.t3) + min(t.t2, t.t3) - min(t.t1 + t.t2, t.t3);
    const std::int64_t second = min(t.t1 - 1, t.t3) + min(t.t2, t.t3) - min(t.t1 + t.t2 - 1, t.t3);
    return intmath::rational_pow(t.prime, first) - intmath::rational_pow(t.prime, second);
}

Rational twist_count_closed_form(u64 d, const TwistParams& params, ValuationConvention convention) {
    require_degree(d, "twist_count_closed_form");
    if (params.n() % d != 0) return Rational(0);
    Rational product(1);
    for (const auto& [p, e] : intmath::factorize(d)) {
        product = product * closed_form_factor(valuation_triple(p, d, params, convention));
    }
    return product;
}

std::map<u64, Rational> closed_form_values(const TwistParams& params, ValuationConvention convention) {
    std::map<u64, Rational> values;
    for (u64 d : intmath::divisors(params.n())) {
        values.emplace(d, twist_count_closed_form(d, params, convention));
    }
    return values;
}

DegreeProfile degree_profile(const TwistParams& params, ProfileMethod method, ValuationConvention convention) {
    DegreeProfile profile;
    profile.total = total_twists(params);
    if (method == ProfileMethod::moebius) {
        for (u64 d : intmath::divisors(params.n())) profile.entries[d] = twist_count_moebius(d, params);
        if (profile.entry_sum() != profile.total) {
            throw PropertyViolation("degree_profile: Moebius counts sum to " +
                                    std::to_string(profile.entry_sum()) + " but the total is " +
                                    std::to_string(profile.total));
        }
        return profile;
    }
    for (const auto& [d, value] : closed_form_values(params, convention)) {
        if (!value.is_integer() || value.numerator() < 0) {
            throw NonIntegralCount("degree_profile: closed form gives " + value.to_string() +
                                   " at d=" + std::to_string(d));
        }
        profile.entries[d] = static_cast<u64>(value.numerator());
    }
    return profile;
}

}  // namespace twist::formula
