#pragma once

// Twist counts from closed formulas: the total |A/(s-1)A|, the kernel size
// c(d, s, n), exact-degree counts by Moebius inversion over c, and the
// per-prime product formula. Each is exposed separately so that
// disagreements between them can be observed.

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "twist/degree_profile.hpp"
#include "twist/intmath.hpp"

namespace twist::formula {

using u64 = std::uint64_t;
using intmath::Rational;

/// n = |Aut| and the Frobenius multiplier s, a unit in [1, n].
class TwistParams {
public:
    TwistParams(u64 n, u64 s);

    u64 n() const noexcept { return n_; }
    u64 s() const noexcept { return s_; }

    friend bool operator==(const TwistParams&, const TwistParams&) = default;

private:
    u64 n_;
    u64 s_;
};

/// How the valuations t1 = ord_p(s-1) and t2 = ord_p(1 + s + ... + s^(d-1))
/// are read when s is only known modulo n.
enum class ValuationConvention {
    /// ord_p of gcd(., n): intrinsic to the residue class of s, never above ord_p(n).
    capped,
    /// ord_p of the integer value at the representative s in [1, n]; s = 1 gives t1 = infinity.
    exact,
};

enum class ProfileMethod { moebius, closed_form };

std::string_view to_string(ValuationConvention convention) noexcept;
ValuationConvention parse_convention(std::string_view text);

/// Stand-in for an infinite t1 in the min-expressions; larger than any t3 that fits in 64 bits.
inline constexpr std::int64_t kInfiniteValuation = std::int64_t{1} << 40;

struct ValuationTriple {
    u64 prime;
    std::int64_t t1;
    std::int64_t t2;
    std::int64_t t3;

    friend bool operator==(const ValuationTriple&, const ValuationTriple&) = default;
};

ValuationTriple valuation_triple(u64 p, u64 d, const TwistParams& params,
                                 ValuationConvention convention = ValuationConvention::capped);

/// gcd(s - 1, n), with gcd(0, n) = n.
u64 total_twists(const TwistParams& params);

/// c(d, s, n) = gcd(s-1, n) gcd(1 + s + ... + s^(d-1), n) / gcd(s^d - 1, n).
u64 kernel_size_c(u64 d, const TwistParams& params);

/// Sum over d' | d of mu(d') c(d/d', s, n); zero when d does not divide n.
u64 twist_count_moebius(u64 d, const TwistParams& params);

/// One factor of the product formula:
/// p^(min(t1,t3) + min(t2,t3) - min(t1+t2,t3)) - p^(min(t1-1,t3) + min(t2,t3) - min(t1+t2-1,t3)).
Rational closed_form_factor(const ValuationTriple& t);

/// Product of closed_form_factor over primes p | d; zero when d does not divide n.
/// Exact rational because the exact-valuation reading can leave the integers.
Rational twist_count_closed_form(u64 d, const TwistParams& params,
                                 ValuationConvention convention = ValuationConvention::capped);

/// Closed-form values for every d | n.
std::map<u64, Rational> closed_form_values(const TwistParams& params,
                                           ValuationConvention convention = ValuationConvention::capped);

/// Profile over every d | n with total = total_twists. MOEBIUS asserts the
/// entries sum to the total; CLOSED_FORM throws NonIntegralCount if an entry
/// is not a nonnegative integer.
DegreeProfile degree_profile(const TwistParams& params, ProfileMethod method,
                             ValuationConvention convention = ValuationConvention::capped);

}  // namespace twist::formula
