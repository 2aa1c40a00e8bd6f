#pragma once

// Twists of short Weierstrass curves y^2 = x^3 + ax + b over small F_q, p >= 5,
// counted by brute force: enumerate every curve with the same j-invariant,
// split them into F_q-isomorphism classes, and find each class's degree as
// the least extension over which it becomes isomorphic to the base curve.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "twist/degree_profile.hpp"
#include "twist/finite_field.hpp"
#include "twist/twist_formula.hpp"

namespace twist::ec {

using u64 = std::uint64_t;
using ff::FieldElement;
using ff::FiniteField;

/// Twist degrees never exceed |Aut| <= 6, so towers stop there.
inline constexpr unsigned kMaxTwistDegree = 6;
/// Largest q for which whole twist families are enumerated.
inline constexpr u64 kMaxFamilyFieldOrder = 200;

class WeierstrassCurve {
public:
    /// Throws std::invalid_argument if a and b lie in different fields or 4a^3 + 27b^2 = 0.
    WeierstrassCurve(FieldElement a, FieldElement b);

    const FieldElement& a() const noexcept { return a_; }
    const FieldElement& b() const noexcept { return b_; }
    const FiniteField& field() const noexcept { return a_.field(); }

    std::string to_string() const;

    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

private:
    FieldElement a_;
    FieldElement b_;
};

/// Total order used for "lexicographically smallest": a's index, then b's.
bool curve_less(const WeierstrassCurve& lhs, const WeierstrassCurve& rhs) noexcept;

FieldElement j_invariant(const WeierstrassCurve& curve);

/// |Aut| over the algebraic closure: 6 for j = 0, 4 for j = 1728, otherwise 2.
unsigned aut_size(const WeierstrassCurve& curve);

/// Whether some u in `over`^x has a2 = u^4 a1 and b2 = u^6 b1 (both curves embedded into `over`).
bool are_isomorphic(const WeierstrassCurve& lhs, const WeierstrassCurve& rhs, const FiniteField& over);

/// Least t with lhs and rhs isomorphic over F_{q^t}. Requires equal j-invariants.
unsigned twist_degree(const WeierstrassCurve& lhs, const WeierstrassCurve& rhs);

/// Every nonsingular curve over the same field sharing the base curve's
/// j-invariant, in curve_less order.
std::vector<WeierstrassCurve> twist_family(const WeierstrassCurve& base);

struct TwistClass {
    WeierstrassCurve representative;
    unsigned degree;
    u64 size;
};

struct TwistClassReport {
    WeierstrassCurve base;
    unsigned m;  // |Aut|
    u64 M;       // |mu_m(F_q)|
    u64 family_size;
    std::vector<TwistClass> classes;
    DegreeProfile profile;  // keyed by every d | m
};

/// Partition of the twist family into F_q-isomorphism classes, without checking the count.
TwistClassReport partition_twist_family(const WeierstrassCurve& base);

/// As partition_twist_family, but throws PropertyViolation unless there are exactly M classes.
TwistClassReport enumerate_twist_classes(const WeierstrassCurve& base);

/// One line of the survey: the enumerated profile next to the two predictions.
struct SurveyRow {
    WeierstrassCurve representative;
    FieldElement j;
    TwistClassReport report;
    formula::TwistParams params;  // n = m, s = q mod m
    DegreeProfile phi_prediction;
    DegreeProfile formula_prediction;  // Moebius route
    std::map<u64, intmath::Rational> closed_form;

    bool class_count_matches() const { return report.classes.size() == report.M; }
    bool matches_phi() const { return report.profile == phi_prediction; }
    bool matches_formula() const { return report.profile == formula_prediction; }
    bool closed_form_matches() const;
    bool agree() const { return class_count_matches() && matches_phi() && matches_formula(); }
};

/// Smallest curve for each j-invariant of the field, ordered by j's index.
std::vector<WeierstrassCurve> survey_representatives(const FiniteField& field);

SurveyRow survey_row(const WeierstrassCurve& representative);

/// Fields F_{p^r} for every listed p and r, validated: p >= 5 prime, q <= kMaxFamilyFieldOrder.
std::vector<const FiniteField*> survey_fields(std::span<const u64> primes, std::span<const unsigned> degrees);

/// Serial survey over every field and every j-invariant.
std::vector<SurveyRow> survey(std::span<const u64> primes, std::span<const unsigned> degrees);

}  // namespace twist::ec
