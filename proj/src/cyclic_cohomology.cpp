#include "twist/cyclic_cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "twist/errors.hpp"
#include "twist/intmath.hpp"

namespace twist::cohomology {

namespace {

__extension__ using u128 = unsigned __int128;

u64 mul(u64 a, u64 b, u64 n) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % n);
}

// Image of the endomorphism x -> e*x, where e is the value of the endomorphism on 1.
SubgroupImage image_of(u64 e, u64 n) {
    SubgroupImage image;
    image.generator = e;
    std::vector<bool> seen(n, false);
    for (u64 x = 0; x < n; ++x) seen[mul(e, x, n)] = true;
    for (u64 r = 0; r < n; ++r) {
        if (seen[r]) image.elements.push_back(r);
    }
    image.order = image.elements.size();
    return image;
}

std::vector<u64> kernel_of(u64 e, u64 n) {
    std::vector<u64> kernel;
    for (u64 x = 0; x < n; ++x) {
        if (mul(e, x, n) == 0) kernel.push_back(x);
    }
    return kernel;
}

// Value on the generator 1 of Frob^d - 1.
u64 frobenius_power_minus_one(const CyclicModule& mod, u64 d) {
    const u64 n = mod.order();
    return (mod.frobenius(1 % n, d) + n - 1 % n) % n;
}

void require_degree(u64 d, const char* where) {
    if (d == 0) throw std::invalid_argument(std::string(where) + ": degree must be >= 1");
}

u64 exact_quotient(u64 numerator, u64 denominator, const char* where) {
    if (denominator == 0 || numerator % denominator != 0) {
        throw ArithmeticFault(std::string(where) + ": " + std::to_string(numerator) +
                              " is not divisible by " + std::to_string(denominator));
    }
    return numerator / denominator;
}

}  // namespace

CyclicModule::CyclicModule(u64 n, u64 s) : n_(n), s_(s) {
    if (n == 0) throw std::invalid_argument("CyclicModule: order must be >= 1");
    if (s == 0 || s > n) throw std::invalid_argument("CyclicModule: multiplier must lie in [1, n]");
    for (u64 x = 1; x < n; ++x) {
        if (mul(s, x, n) == 0) {
            throw std::invalid_argument("CyclicModule: multiplier " + std::to_string(s) +
                                        " is not a unit modulo " + std::to_string(n));
        }
    }
}

u64 CyclicModule::frobenius(u64 x, u64 times) const noexcept {
    x %= n_;
    for (u64 i = 0; i < times; ++i) x = mul(s_, x, n_);
    return x;
}

u64 CyclicModule::norm(u64 x, u64 d) const noexcept {
    u64 acc = 0;
    u64 y = x % n_;
    for (u64 i = 0; i < d; ++i) {
        acc = (acc + y) % n_;
        y = mul(s_, y, n_);
    }
    return acc;
}

bool SubgroupImage::contains(u64 residue) const {
    return std::binary_search(elements.begin(), elements.end(), residue);
}

SubgroupImage frobenius_power_image(const CyclicModule& mod, u64 d) {
    return image_of(frobenius_power_minus_one(mod, d), mod.order());
}

std::vector<u64> frobenius_power_kernel(const CyclicModule& mod, u64 d) {
    return kernel_of(frobenius_power_minus_one(mod, d), mod.order());
}

std::vector<u64> norm_kernel(const CyclicModule& mod, u64 d) {
    require_degree(d, "norm_kernel");
    return kernel_of(mod.norm(1, d), mod.order());
}

u64 quotient_size(const CyclicModule& mod) {
    const SubgroupImage image = frobenius_power_image(mod, 1);
    return exact_quotient(mod.order(), image.order, "quotient_size");
}

std::vector<u64> trivialized_classes(const CyclicModule& mod, u64 d) {
    require_degree(d, "trivialized_classes");
    const u64 n = mod.order();
    const SubgroupImage coboundaries = frobenius_power_image(mod, 1);
    const SubgroupImage target = frobenius_power_image(mod, d);
    std::set<u64> representatives;
    for (u64 x = 0; x < n; ++x) {
        if (!target.contains(mod.norm(x, d))) continue;
        u64 rep = n;
        for (u64 e : coboundaries.elements) rep = std::min(rep, (x + e) % n);
        representatives.insert(rep);
    }
    return {representatives.begin(), representatives.end()};
}

u64 kernel_tau_d(const CyclicModule& mod, u64 d) {
    require_degree(d, "kernel_tau_d");
    const u64 n = mod.order();
    const SubgroupImage coboundaries = frobenius_power_image(mod, 1);
    const SubgroupImage target = frobenius_power_image(mod, d);
    const u64 tau = mod.norm(1, d);
    u64 hits = 0;
    for (u64 x = 0; x < n; ++x) {
        if (target.contains(mul(tau, x, n))) ++hits;
    }
    return exact_quotient(hits, coboundaries.order, "kernel_tau_d");
}

bool exact_sequence_check(const CyclicModule& mod, u64 d) {
    require_degree(d, "exact_sequence_check");
    const u64 fixed = frobenius_power_kernel(mod, 1).size();
    const u64 fixed_d = frobenius_power_kernel(mod, d).size();
    const u64 norm_zero = norm_kernel(mod, d).size();
    const u64 lhs = kernel_tau_d(mod, d);
    return lhs * fixed_d == fixed * norm_zero;
}

u64 h1_finite_cyclic(const CyclicModule& mod, u64 d) {
    require_degree(d, "h1_finite_cyclic");
    const u64 n = mod.order();
    if (mod.frobenius(1 % n, d) != 1 % n) {
        throw std::invalid_argument("h1_finite_cyclic: s^" + std::to_string(d) +
                                    " is not 1 modulo " + std::to_string(n) +
                                    "; the action does not factor through Z/" + std::to_string(d));
    }
    // A crossed homomorphism Z/d -> A is fixed by a = f(generator), subject to N(a) = 0.
    u64 cocycles = 0;
    for (u64 a = 0; a < n; ++a) {
        if (mod.norm(a, d) == 0) ++cocycles;
    }
    const SubgroupImage coboundaries = frobenius_power_image(mod, 1);
    return exact_quotient(cocycles, coboundaries.order, "h1_finite_cyclic");
}

u64 oracle_exact_degree_count(const CyclicModule& mod, u64 d) {
    require_degree(d, "oracle_exact_degree_count");
    std::int64_t sum = 0;
    for (u64 e : intmath::divisors(d)) {
        const int mu = intmath::moebius(d / e);
        if (mu != 0) sum += mu * static_cast<std::int64_t>(kernel_tau_d(mod, e));
    }
    if (sum < 0) {
        throw PropertyViolation("oracle_exact_degree_count: negative count at d=" + std::to_string(d));
    }
    return static_cast<u64>(sum);
}

DegreeProfile degree_profile_oracle(const CyclicModule& mod) {
    const std::vector<u64> degrees = intmath::divisors(mod.order());
    std::map<u64, std::int64_t> kernel;
    for (u64 d : degrees) kernel[d] = static_cast<std::int64_t>(kernel_tau_d(mod, d));

    DegreeProfile profile;
    profile.total = quotient_size(mod);
    for (u64 d : degrees) {
        std::int64_t sum = 0;
        for (u64 e : intmath::divisors(d)) sum += intmath::moebius(d / e) * kernel.at(e);
        if (sum < 0) {
            throw PropertyViolation("degree_profile_oracle: negative count at d=" + std::to_string(d));
        }
        profile.entries[d] = static_cast<u64>(sum);
    }
    if (profile.entry_sum() != profile.total) {
        throw PropertyViolation("degree_profile_oracle: counts sum to " +
                                std::to_string(profile.entry_sum()) + ", expected " +
                                std::to_string(profile.total));
    }
    return profile;
}

}  // namespace twist::cohomology
