#include "twist/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "twist/errors.hpp"

namespace twist::ff {

namespace {

using Poly = std::vector<u64>;  // ascending coefficients over F_p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inv_mod_p(u64 a, u64 p) {
    return intmath::pow_mod(static_cast<std::int64_t>(a), p - 2, p);
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, u64 p) {
    trim(a);
    const u64 lead_inv = inv_mod_p(b.back(), p);
    Poly quotient;
    if (a.size() >= b.size()) quotient.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const u64 factor = a.back() * lead_inv % p;
        quotient[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
        }
        trim(a);
    }
    trim(quotient);
    return {quotient, a};
}

Poly poly_mod(const Poly& a, const Poly& m, u64 p) { return poly_divmod(a, m, p).second; }

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(Poly base, u64 exp, const Poly& m, u64 p) {
    Poly result{1};
    base = poly_mod(base, m, p);
    while (exp != 0) {
        if (exp & 1U) result = poly_mod(poly_mul(result, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        exp >>= 1U;
    }
    return result;
}

bool has_root(const Poly& f, u64 p) {
    for (u64 x = 0; x < p; ++x) {
        u64 acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

// Rabin: f of degree r is irreducible iff x^(p^r) = x mod f and
// gcd(x^(p^(r/l)) - x, f) = 1 for every prime l | r.
bool rabin_irreducible(const Poly& f, u64 p) {
    const auto r = static_cast<unsigned>(f.size() - 1);
    std::vector<unsigned> checkpoints;
    for (const auto& [l, e] : intmath::factorize(r)) checkpoints.push_back(r / static_cast<unsigned>(l));
    const Poly x{0, 1};
    Poly h = x;
    for (unsigned i = 1; i <= r; ++i) {
        h = poly_powmod(h, p, f, p);
        if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
            if (poly_gcd(poly_sub(h, x, p), f, p).size() != 1) return false;
        }
    }
    return poly_sub(h, x, p).empty();
}

void require_field_prime(u64 p) {
    if (p < 5 || !intmath::is_prime(p)) {
        throw std::invalid_argument("finite fields require a prime characteristic p >= 5, got " +
                                    std::to_string(p));
    }
    if (p >= (u64{1} << 31)) throw std::invalid_argument("characteristic too large for desk-scale arithmetic");
}

struct FieldRegistry {
    std::mutex mutex;
    std::map<std::pair<u64, unsigned>, std::unique_ptr<FiniteField>> fields;
};

FieldRegistry& registry() {
    static FieldRegistry instance;
    return instance;
}

struct EmbeddingCache {
    std::mutex mutex;
    std::map<std::pair<const FiniteField*, const FiniteField*>, FieldElement> roots;
};

EmbeddingCache& embedding_cache() {
    static EmbeddingCache instance;
    return instance;
}

FieldElement evaluate_in(const std::vector<u64>& poly, const FieldElement& x) {
    FieldElement acc = x.field().zero();
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = acc * x + x.field().constant(static_cast<std::int64_t>(poly[i]));
    }
    return acc;
}

// Roots of the small field's modulus live in the unique subfield of order q inside
// `big`: {0} together with the powers of z^((Q-1)/(q-1)) for a primitive z.
FieldElement find_embedding_root(const FiniteField& small, const FiniteField& big) {
    const FieldElement w = big.primitive_element().pow((big.order() - 1) / (small.order() - 1));
    std::optional<FieldElement> best;
    FieldElement candidate = big.one();
    const auto consider = [&](const FieldElement& y) {
        if (evaluate_in(small.modulus(), y).is_zero() && (!best || y.index() < best->index())) best = y;
    };
    consider(big.zero());
    for (u64 k = 0; k + 1 < small.order(); ++k) {
        consider(candidate);
        candidate *= w;
    }
    if (!best) {
        throw InternalFault("embed: no root of the modulus of " + small.name() + " in " + big.name());
    }
    return *best;
}

}  // namespace

std::vector<u64> find_irreducible(u64 p, unsigned r) {
    require_field_prime(p);
    if (r == 0 || r > kMaxDegree) throw std::invalid_argument("find_irreducible: degree out of range");
    if (r == 1) return {0, 1};
    const u64 candidates = intmath::checked_pow(p, r);
    for (u64 index = 0; index < candidates; ++index) {
        Poly f(r + 1, 0);
        u64 rest = index;
        for (unsigned i = 0; i < r; ++i) {
            f[i] = rest % p;
            rest /= p;
        }
        f[r] = 1;
        const bool irreducible = r <= 3 ? !has_root(f, p) : rabin_irreducible(f, p);
        if (irreducible) return f;
    }
    throw InternalFault("find_irreducible: no irreducible polynomial found");
}

// --- FiniteField --------------------------------------------------------------------------

FiniteField::FiniteField(u64 p, unsigned r)
    : p_(p), r_(r), q_(intmath::checked_pow(p, r)), modulus_(find_irreducible(p, r)),
      unit_factors_(intmath::factorize(q_ - 1)) {}

const FiniteField& FiniteField::get(u64 p, unsigned degree) {
    require_field_prime(p);
    if (degree == 0 || degree > kMaxDegree) {
        throw std::invalid_argument("FiniteField: degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
    }
    const u64 q = intmath::checked_pow(p, degree);
    if (q > (u64{1} << 62)) throw std::invalid_argument("FiniteField: order exceeds 2^62");

    FieldRegistry& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto& slot = reg.fields[{p, degree}];
    if (!slot) slot.reset(new FiniteField(p, degree));
    return *slot;
}

FieldElement FiniteField::zero() const { return FieldElement(this); }

FieldElement FiniteField::one() const {
    FieldElement e(this);
    e.c_[0] = 1;
    return e;
}

FieldElement FiniteField::constant(std::int64_t value) const {
    FieldElement e(this);
    e.c_[0] = static_cast<std::uint32_t>(intmath::reduce(value, p_));
    return e;
}

FieldElement FiniteField::from_coefficients(std::span<const u64> coeffs) const {
    if (coeffs.size() > r_) throw std::invalid_argument("from_coefficients: too many coefficients for " + name());
    FieldElement e(this);
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.c_[i] = static_cast<std::uint32_t>(coeffs[i] % p_);
    return e;
}

FieldElement FiniteField::element(u64 index) const {
    if (index >= q_) throw std::out_of_range("element index beyond field order");
    FieldElement e(this);
    for (unsigned i = 0; i < r_; ++i) {
        e.c_[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::vector<FieldElement> FiniteField::elements() const {
    if (q_ > kEnumerationLimit) {
        throw std::length_error("refusing to enumerate " + name() + ": order exceeds " +
                                std::to_string(kEnumerationLimit));
    }
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (u64 i = 0; i < q_; ++i) out.push_back(element(i));
    return out;
}

FieldElement FiniteField::primitive_element() const {
    std::call_once(primitive_once_, [this] {
        for (u64 i = 1; i < q_; ++i) {
            const FieldElement candidate = element(i);
            if (multiplicative_order(candidate) == q_ - 1) {
                primitive_ = candidate.c_;
                return;
            }
        }
        throw InternalFault("no primitive element in " + name());
    });
    FieldElement e(this);
    e.c_ = primitive_;
    return e;
}

std::string FiniteField::name() const {
    return "F_" + std::to_string(q_);
}

// --- FieldElement -------------------------------------------------------------------------

void FieldElement::require_same_field(const FieldElement& other) const {
    if (field_ != other.field_) {
        throw std::invalid_argument("field mismatch: " + field_->name() + " vs " + other.field_->name());
    }
}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const noexcept {
    return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

u64 FieldElement::index() const noexcept {
    u64 idx = 0;
    for (unsigned i = field_->r_; i-- > 0;) idx = idx * field_->p_ + c_[i];
    return idx;
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same_field(other);
    FieldElement out(field_);
    const u64 p = field_->p_;
    for (unsigned i = 0; i < field_->r_; ++i) out.c_[i] = static_cast<std::uint32_t>((c_[i] + u64{other.c_[i]}) % p);
    return out;
}

FieldElement FieldElement::operator-() const {
    FieldElement out(field_);
    const u64 p = field_->p_;
    for (unsigned i = 0; i < field_->r_; ++i) out.c_[i] = static_cast<std::uint32_t>((p - c_[i]) % p);
    return out;
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    require_same_field(other);
    return *this + (-other);
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same_field(other);
    const unsigned r = field_->r_;
    const u64 p = field_->p_;
    std::array<u64, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < r; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + u64{c_[i]} * other.c_[j]) % p;
    }
    // Reduce by the monic modulus from the top down.
    const auto& m = field_->modulus_;
    for (unsigned k = 2 * r - 2; k >= r && k < 2 * r; --k) {
        const u64 t = prod[k];
        if (t == 0) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < r; ++i) prod[k - r + i] = (prod[k - r + i] + (p - t) * m[i]) % p;
    }
    FieldElement out(field_);
    for (unsigned i = 0; i < r; ++i) out.c_[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->name());
    const u64 p = field_->p_;
    // Extended Euclid: track s with s * a = remainder (mod modulus).
    Poly a(c_.begin(), c_.begin() + field_->r_);
    trim(a);
    Poly r0 = field_->modulus_;
    Poly r1 = a;
    Poly s0{};
    Poly s1{1};
    while (r1.size() > 1) {
        auto [quotient, remainder] = poly_divmod(r0, r1, p);
        Poly s2 = poly_sub(s0, poly_mul(quotient, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant because the modulus is irreducible.
    s1 = poly_mod(s1, field_->modulus_, p);
    const u64 scale = inv_mod_p(r1.at(0), p);
    FieldElement out(field_);
    for (std::size_t i = 0; i < s1.size(); ++i) out.c_[i] = static_cast<std::uint32_t>(s1[i] * scale % p);
    return out;
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
    require_same_field(other);
    if (other.is_zero()) throw DivisionByZero("division by zero in " + field_->name());
    return *this * other.inverse();
}

FieldElement FieldElement::pow(u64 exponent) const {
    FieldElement result = field_->one();
    FieldElement base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

std::string FieldElement::to_string() const {
    std::string out;
    for (unsigned i = field_->r_; i-- > 0;) {
        const std::uint32_t c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c != 1) out += std::to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

// --- free functions -----------------------------------------------------------------------

FieldElement ff_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("ff_arith: unknown operation");
}

std::vector<FieldElement> enumerate_elements(const FiniteField& field) { return field.elements(); }

u64 multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) throw std::invalid_argument("multiplicative_order of zero");
    u64 order = a.field().order() - 1;
    for (const auto& [l, e] : a.field().unit_order_factors()) {
        for (unsigned i = 0; i < e && a.pow(order / l).is_one(); ++i) order /= l;
    }
    return order;
}

bool is_mth_power(const FieldElement& a, u64 m) {
    if (a.is_zero()) throw std::invalid_argument("is_mth_power of zero");
    if (m == 0) throw std::invalid_argument("is_mth_power: m must be >= 1");
    const u64 unit_order = a.field().order() - 1;
    return a.pow(unit_order / intmath::gcd(m, unit_order)).is_one();
}

u64 mu_m_size(u64 q, u64 m) {
    if (q < 2) throw std::invalid_argument("mu_m_size: q must be a prime power >= 2");
    return intmath::gcd(m, q - 1);
}

FieldElement embed(const FieldElement& a, const FiniteField& big) {
    const FiniteField& small = a.field();
    if (&small == &big) return a;
    if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0) {
        throw std::invalid_argument("embed: " + small.name() + " is not a subfield of " + big.name());
    }
    if (small.degree() == 1) return big.constant(a.coefficients()[0]);

    EmbeddingCache& cache = embedding_cache();
    const auto key = std::make_pair(&small, &big);
    std::optional<FieldElement> root;
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.roots.find(key); it != cache.roots.end()) root = it->second;
    }
    if (!root) {
        // Deterministic, so concurrent first callers insert the same value.
        root = find_embedding_root(small, big);
        std::lock_guard lock(cache.mutex);
        cache.roots.emplace(key, *root);
    }
    const auto coeffs = a.coefficients();
    std::vector<u64> poly(coeffs.begin(), coeffs.end());
    return evaluate_in(poly, *root);
}

}  // namespace twist::ff
