#pragma once

// Grid kernels: the (n, s, d) verification sweep and the elliptic-curve survey.
// Each has a serial reference and an OpenMP version; both fill rows in the
// same deterministic order, so their outputs compare equal.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twist/ec_twist_lab.hpp"
#include "twist/intmath.hpp"
#include "twist/twist_formula.hpp"

namespace twist::kernels {

using u64 = std::uint64_t;
using intmath::Rational;

struct SweepOptions {
    u64 max_n = 0;
    formula::ValuationConvention convention = formula::ValuationConvention::capped;
};

/// Every route's value at one degree d | n.
struct DegreeCheck {
    u64 d = 0;
    Rational closed_form;
    u64 moebius = 0;
    u64 oracle = 0;
    u64 kernel_c = 0;    // c(d, s, n)
    u64 kernel_tau = 0;  // enumerated |ker tau_d|
    bool exact_sequence = false;
    /// h1_finite_cyclic(d) == kernel_tau when s^d = 1 (mod n); empty otherwise.
    std::optional<bool> inflation_restriction;

    bool methods_agree() const { return closed_form == Rational(static_cast<std::int64_t>(moebius)) && moebius == oracle; }

    friend bool operator==(const DegreeCheck&, const DegreeCheck&) = default;
};

struct SweepRow {
    u64 n = 0;
    u64 s = 0;
    u64 total = 0;           // gcd(s - 1, n)
    u64 quotient_size = 0;   // enumerated |A/(s-1)A|
    u64 oracle_sum = 0;      // sum of oracle exact-degree counts
    std::vector<DegreeCheck> degrees;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct Counterexample {
    u64 n = 0;
    u64 s = 0;
    u64 d = 0;  // 0 for row-level checks
    std::string check;
    std::string detail;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    u64 checks = 0;
    u64 passed = 0;
    std::vector<Counterexample> counterexamples;

    u64 disagreements() const { return checks - passed; }

    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// All (n, s) with 1 <= n <= max_n and s a unit in [1, n], ordered by n then s.
std::vector<std::pair<u64, u64>> sweep_grid(u64 max_n);

SweepRow sweep_row(u64 n, u64 s, formula::ValuationConvention convention);

/// Runs every check over the rows, in row order.
SweepResult summarize(std::vector<SweepRow> rows);

SweepResult sweep_serial(const SweepOptions& options);
SweepResult sweep_parallel(const SweepOptions& options);

/// ec::survey with rows computed concurrently.
std::vector<ec::SurveyRow> survey_parallel(std::span<const u64> primes, std::span<const unsigned> degrees);

}  // namespace twist::kernels
