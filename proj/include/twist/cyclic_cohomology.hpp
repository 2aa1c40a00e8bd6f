#pragma once

// Brute-force cohomology of the cyclic module Z/nZ on which Frobenius acts as
// multiplication by s. Everything here is computed by enumerating residues and
// iterating the Frobenius action; nothing calls the closed-form helpers in
// intmath (gcd, pow_mod, geom_sum_mod), so the formulas can be checked against it.

#include <cstdint>
#include <vector>

#include "twist/degree_profile.hpp"

namespace twist::cohomology {

using u64 = std::uint64_t;

/// Z/nZ with Frobenius acting as x -> s*x. Requires gcd(s, n) = 1 and 1 <= s <= n.
class CyclicModule {
public:
    CyclicModule(u64 n, u64 s);

    u64 order() const noexcept { return n_; }
    u64 multiplier() const noexcept { return s_; }

    /// Frobenius applied `times` times to x, by repeated multiplication.
    u64 frobenius(u64 x, u64 times = 1) const noexcept;
    /// x + Frob x + ... + Frob^(d-1) x.
    u64 norm(u64 x, u64 d) const noexcept;

private:
    u64 n_;
    u64 s_;
};

/// Image of an endomorphism of Z/nZ, stored as its enumerated, sorted element list.
struct SubgroupImage {
    u64 generator = 0;
    u64 order = 0;
    std::vector<u64> elements;

    bool contains(u64 residue) const;
};

/// (Frob^d - 1)A, enumerated.
SubgroupImage frobenius_power_image(const CyclicModule& mod, u64 d);
/// A[Frob^d - 1], enumerated.
std::vector<u64> frobenius_power_kernel(const CyclicModule& mod, u64 d);
/// A[tau_d] where tau_d = 1 + Frob + ... + Frob^(d-1), enumerated.
std::vector<u64> norm_kernel(const CyclicModule& mod, u64 d);

/// |A / (s-1)A| = |H^1(G_k, A)|, the total number of twists.
u64 quotient_size(const CyclicModule& mod);

/// Canonical representatives (coset minima) of the classes of A/(s-1)A that
/// tau_d sends into (s^d - 1)A, i.e. twists trivialized by the degree-d extension.
std::vector<u64> trivialized_classes(const CyclicModule& mod, u64 d);

/// |ker(tau_d : A/(s-1)A -> A/(s^d-1)A)|.
u64 kernel_tau_d(const CyclicModule& mod, u64 d);

/// Checks |ker tau_d| = |A[s-1]| * |A[tau_d]| / |A[s^d-1]| with every term enumerated.
bool exact_sequence_check(const CyclicModule& mod, u64 d);

/// |H^1(Z/d, A)| for the action factoring through Gal(k'/k) = Z/d.
/// Throws std::invalid_argument unless s^d = 1 in Z/nZ.
u64 h1_finite_cyclic(const CyclicModule& mod, u64 d);

/// Twists of exact degree d recovered from kernel sizes by Moebius inversion.
/// Valid for any d >= 1; zero whenever d does not divide n.
u64 oracle_exact_degree_count(const CyclicModule& mod, u64 d);

/// Exact-degree counts for every d | n; total is quotient_size.
DegreeProfile degree_profile_oracle(const CyclicModule& mod);

}  // namespace twist::cohomology
