#include "twist/ec_twist_lab.hpp"

#include <algorithm>
#include <stdexcept>

#include "twist/errors.hpp"

namespace twist::ec {

namespace {

FieldElement discriminant_part(const FieldElement& a, const FieldElement& b) {
    const FiniteField& f = a.field();
    return f.constant(4) * a * a * a + f.constant(27) * b * b;
}

void require_family_field(const FiniteField& field) {
    if (field.order() > kMaxFamilyFieldOrder) {
        throw std::invalid_argument("twist families are only enumerated for q <= " +
                                    std::to_string(kMaxFamilyFieldOrder) + ", got " + field.name());
    }
}

bool exhaustive_generic_search(const FieldElement& a1, const FieldElement& b1, const FieldElement& a2,
                               const FieldElement& b2, const FiniteField& over) {
    for (u64 i = 1; i < over.order(); ++i) {
        const FieldElement u = over.element(i);
        const FieldElement u2 = u * u;
        const FieldElement u4 = u2 * u2;
        if (u4 * a1 == a2 && u4 * u2 * b1 == b2) return true;
    }
    return false;
}

DegreeProfile phi_profile(unsigned m, u64 M) {
    DegreeProfile profile;
    profile.total = M;
    for (u64 d : intmath::divisors(m)) profile.entries[d] = M % d == 0 ? intmath::euler_phi(d) : 0;
    return profile;
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
    if (&a_.field() != &b_.field()) throw std::invalid_argument("WeierstrassCurve: a and b lie in different fields");
    if (discriminant_part(a_, b_).is_zero()) {
        throw std::invalid_argument("WeierstrassCurve: singular curve a=" + a_.to_string() + ", b=" + b_.to_string());
    }
}

std::string WeierstrassCurve::to_string() const {
    return "y^2 = x^3 + (" + a_.to_string() + ")x + (" + b_.to_string() + ") over " + field().name();
}

bool curve_less(const WeierstrassCurve& lhs, const WeierstrassCurve& rhs) noexcept {
    const auto l = std::make_pair(lhs.a().index(), lhs.b().index());
    const auto r = std::make_pair(rhs.a().index(), rhs.b().index());
    return l < r;
}

FieldElement j_invariant(const WeierstrassCurve& curve) {
    const FiniteField& f = curve.field();
    const FieldElement four_a3 = f.constant(4) * curve.a() * curve.a() * curve.a();
    return f.constant(1728) * four_a3 / discriminant_part(curve.a(), curve.b());
}

unsigned aut_size(const WeierstrassCurve& curve) {
    const FieldElement j = j_invariant(curve);
    if (j.is_zero()) return 6;
    if (j == curve.field().constant(1728)) return 4;
    return 2;
}

bool are_isomorphic(const WeierstrassCurve& lhs, const WeierstrassCurve& rhs, const FiniteField& over) {
    const FieldElement a1 = ff::embed(lhs.a(), over);
    const FieldElement b1 = ff::embed(lhs.b(), over);
    const FieldElement a2 = ff::embed(rhs.a(), over);
    const FieldElement b2 = ff::embed(rhs.b(), over);
    if (a1.is_zero() != a2.is_zero() || b1.is_zero() != b2.is_zero()) return false;
    if (a1.is_zero()) return ff::is_mth_power(b2 / b1, 6);
    if (b1.is_zero()) return ff::is_mth_power(a2 / a1, 4);
    if (over.order() <= ff::kEnumerationLimit) return exhaustive_generic_search(a1, b1, a2, b2, over);
    // u^2 = lambda is forced by a2 b1 lambda = a1 b2; then only its squareness matters.
    const FieldElement lambda = (a1 * b2) / (b1 * a2);
    if (!(lambda * lambda * a1 == a2 && lambda * lambda * lambda * b1 == b2)) return false;
    return ff::is_mth_power(lambda, 2);
}

unsigned twist_degree(const WeierstrassCurve& lhs, const WeierstrassCurve& rhs) {
    if (&lhs.field() != &rhs.field()) throw std::invalid_argument("twist_degree: curves over different fields");
    if (!(j_invariant(lhs) == j_invariant(rhs))) {
        throw std::invalid_argument("twist_degree: curves are not geometrically isomorphic");
    }
    const FiniteField& base = lhs.field();
    for (unsigned t = 1; t <= kMaxTwistDegree && base.degree() * t <= ff::kMaxDegree; ++t) {
        const FiniteField& over = FiniteField::get(base.characteristic(), base.degree() * t);
        if (are_isomorphic(lhs, rhs, over)) return t;
    }
    throw InternalFault("twist_degree: no isomorphism up to degree " + std::to_string(kMaxTwistDegree) +
                        " between " + lhs.to_string() + " and " + rhs.to_string());
}

std::vector<WeierstrassCurve> twist_family(const WeierstrassCurve& base) {
    const FiniteField& f = base.field();
    require_family_field(f);
    std::vector<WeierstrassCurve> family;
    if (base.a().is_zero()) {
        for (u64 i = 1; i < f.order(); ++i) family.emplace_back(f.zero(), f.element(i));
    } else if (base.b().is_zero()) {
        for (u64 i = 1; i < f.order(); ++i) family.emplace_back(f.element(i), f.zero());
    } else {
        const FieldElement j = j_invariant(base);
        for (u64 i = 1; i < f.order(); ++i) {
            for (u64 k = 1; k < f.order(); ++k) {
                const FieldElement a = f.element(i);
                const FieldElement b = f.element(k);
                if (discriminant_part(a, b).is_zero()) continue;
                WeierstrassCurve candidate(a, b);
                if (j_invariant(candidate) == j) family.push_back(candidate);
            }
        }
    }
    return family;
}

TwistClassReport partition_twist_family(const WeierstrassCurve& base) {
    const FiniteField& f = base.field();
    const std::vector<WeierstrassCurve> family = twist_family(base);
    const unsigned m = aut_size(base);

    std::vector<TwistClass> classes;
    for (const WeierstrassCurve& curve : family) {
        auto it = std::find_if(classes.begin(), classes.end(), [&](const TwistClass& c) {
            return are_isomorphic(c.representative, curve, f);
        });
        if (it != classes.end()) {
            ++it->size;
        } else {
            classes.push_back({curve, 0, 1});
        }
    }

    TwistClassReport report{base, m, ff::mu_m_size(f.order(), m), family.size(), std::move(classes), {}};
    for (u64 d : intmath::divisors(m)) report.profile.entries[d] = 0;
    for (TwistClass& c : report.classes) {
        c.degree = twist_degree(base, c.representative);
        ++report.profile.entries[c.degree];
    }
    report.profile.total = report.classes.size();
    return report;
}

TwistClassReport enumerate_twist_classes(const WeierstrassCurve& base) {
    TwistClassReport report = partition_twist_family(base);
    if (report.classes.size() != report.M) {
        throw PropertyViolation("twist family of " + base.to_string() + " has " +
                                std::to_string(report.classes.size()) + " classes, expected M = " +
                                std::to_string(report.M));
    }
    return report;
}

bool SurveyRow::closed_form_matches() const {
    for (const auto& [d, value] : closed_form) {
        if (!(value == intmath::Rational(static_cast<std::int64_t>(report.profile.at(d))))) return false;
    }
    return true;
}

std::vector<WeierstrassCurve> survey_representatives(const FiniteField& field) {
    require_family_field(field);
    std::map<u64, WeierstrassCurve> smallest;  // keyed by j's index
    for (u64 i = 0; i < field.order(); ++i) {
        for (u64 k = 0; k < field.order(); ++k) {
            const FieldElement a = field.element(i);
            const FieldElement b = field.element(k);
            if (discriminant_part(a, b).is_zero()) continue;
            WeierstrassCurve curve(a, b);
            smallest.emplace(j_invariant(curve).index(), curve);  // first insertion is the smallest
        }
    }
    std::vector<WeierstrassCurve> out;
    out.reserve(smallest.size());
    for (auto& [j, curve] : smallest) out.push_back(curve);
    return out;
}

SurveyRow survey_row(const WeierstrassCurve& representative) {
    TwistClassReport report = partition_twist_family(representative);
    const u64 q = representative.field().order();
    const unsigned m = report.m;
    const u64 residue = q % m;
    formula::TwistParams params(m, residue == 0 ? m : residue);
    DegreeProfile phi = phi_profile(m, report.M);
    DegreeProfile predicted = formula::degree_profile(params, formula::ProfileMethod::moebius);
    auto closed = formula::closed_form_values(params);
    return SurveyRow{representative, j_invariant(representative), std::move(report), params,
                     std::move(phi), std::move(predicted), std::move(closed)};
}

std::vector<const FiniteField*> survey_fields(std::span<const u64> primes, std::span<const unsigned> degrees) {
    std::vector<const FiniteField*> fields;
    for (u64 p : primes) {
        for (unsigned r : degrees) {
            const FiniteField& field = FiniteField::get(p, r);
            require_family_field(field);
            fields.push_back(&field);
        }
    }
    return fields;
}

std::vector<SurveyRow> survey(std::span<const u64> primes, std::span<const unsigned> degrees) {
    std::vector<SurveyRow> rows;
    for (const FiniteField* field : survey_fields(primes, degrees)) {
        for (const WeierstrassCurve& rep : survey_representatives(*field)) rows.push_back(survey_row(rep));
    }
    return rows;
}

}  // namespace twist::ec
