#include "twist/kernels.hpp"

#include <exception>
#include <stdexcept>

#include <omp.h>

#include "twist/cyclic_cohomology.hpp"

namespace twist::kernels {

namespace {

std::string degree_detail(const DegreeCheck& c) {
    return "closed_form=" + c.closed_form.to_string() + " moebius=" + std::to_string(c.moebius) +
           " oracle=" + std::to_string(c.oracle);
}

void require_max_n(u64 max_n) {
    if (max_n == 0) throw std::invalid_argument("sweep: max_n must be >= 1");
}

// Runs body(i) for i in [0, count) across threads; the first exception (by index) is rethrown.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
    std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

std::vector<std::pair<u64, u64>> sweep_grid(u64 max_n) {
    require_max_n(max_n);
    std::vector<std::pair<u64, u64>> grid;
    for (u64 n = 1; n <= max_n; ++n) {
        for (u64 s = 1; s <= n; ++s) {
            if (intmath::gcd(s, n) == 1) grid.emplace_back(n, s);
        }
    }
    return grid;
}

SweepRow sweep_row(u64 n, u64 s, formula::ValuationConvention convention) {
    const formula::TwistParams params(n, s);
    const cohomology::CyclicModule mod(n, s);
    const DegreeProfile oracle = cohomology::degree_profile_oracle(mod);

    SweepRow row;
    row.n = n;
    row.s = s;
    row.total = formula::total_twists(params);
    row.quotient_size = cohomology::quotient_size(mod);
    row.oracle_sum = oracle.entry_sum();
    for (u64 d : intmath::divisors(n)) {
        DegreeCheck c;
        c.d = d;
        c.closed_form = formula::twist_count_closed_form(d, params, convention);
        c.moebius = formula::twist_count_moebius(d, params);
        c.oracle = oracle.at(d);
        c.kernel_c = formula::kernel_size_c(d, params);
        c.kernel_tau = cohomology::kernel_tau_d(mod, d);
        c.exact_sequence = cohomology::exact_sequence_check(mod, d);
        if (mod.frobenius(1 % n, d) == 1 % n) {
            c.inflation_restriction = cohomology::h1_finite_cyclic(mod, d) == c.kernel_tau;
        }
        row.degrees.push_back(std::move(c));
    }
    return row;
}

SweepResult summarize(std::vector<SweepRow> rows) {
    SweepResult result;
    const auto record = [&](bool ok, const SweepRow& row, u64 d, const char* check, std::string detail) {
        ++result.checks;
        if (ok) {
            ++result.passed;
        } else {
            result.counterexamples.push_back({row.n, row.s, d, check, std::move(detail)});
        }
    };
    for (const SweepRow& row : rows) {
        for (const DegreeCheck& c : row.degrees) {
            record(c.moebius == c.oracle, row, c.d, "moebius_vs_oracle", degree_detail(c));
            record(c.closed_form == Rational(static_cast<std::int64_t>(c.oracle)), row, c.d,
                   "closed_form_vs_oracle", degree_detail(c));
            record(c.kernel_c == c.kernel_tau, row, c.d, "kernel_c_vs_tau",
                   "c=" + std::to_string(c.kernel_c) + " enumerated=" + std::to_string(c.kernel_tau));
            record(c.exact_sequence, row, c.d, "exact_sequence", "");
            if (c.inflation_restriction) {
                record(*c.inflation_restriction, row, c.d, "inflation_restriction", "");
            }
        }
        const std::string totals = "total=" + std::to_string(row.total) + " quotient=" +
                                   std::to_string(row.quotient_size) + " oracle_sum=" +
                                   std::to_string(row.oracle_sum);
        record(row.n % row.total == 0, row, 0, "total_divides_n", totals);
        record(row.total == row.quotient_size, row, 0, "total_vs_quotient", totals);
        record(row.oracle_sum == row.total, row, 0, "oracle_sum_vs_total", totals);
        if (row.n % 2 == 0) {
            record((row.total == row.n) == (row.s == 1), row, 0, "full_count_iff_trivial_action", totals);
        }
    }
    result.rows = std::move(rows);
    return result;
}

SweepResult sweep_serial(const SweepOptions& options) {
    std::vector<SweepRow> rows;
    for (const auto& [n, s] : sweep_grid(options.max_n)) rows.push_back(sweep_row(n, s, options.convention));
    return summarize(std::move(rows));
}

SweepResult sweep_parallel(const SweepOptions& options) {
    const auto grid = sweep_grid(options.max_n);
    std::vector<SweepRow> rows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        rows[i] = sweep_row(grid[i].first, grid[i].second, options.convention);
    });
    return summarize(std::move(rows));
}

std::vector<ec::SurveyRow> survey_parallel(std::span<const u64> primes, std::span<const unsigned> degrees) {
    std::vector<ec::WeierstrassCurve> tasks;
    for (const ec::FiniteField* field : ec::survey_fields(primes, degrees)) {
        for (const auto& rep : ec::survey_representatives(*field)) tasks.push_back(rep);
    }
    std::vector<std::optional<ec::SurveyRow>> slots(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) { slots[i] = ec::survey_row(tasks[i]); });
    std::vector<ec::SurveyRow> rows;
    rows.reserve(slots.size());
    for (auto& slot : slots) rows.push_back(std::move(*slot));
    return rows;
}

}  // namespace twist::kernels
