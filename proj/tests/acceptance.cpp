// Acceptance checks: one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "twist/cyclic_cohomology.hpp"
#include "twist/ec_twist_lab.hpp"
#include "twist/finite_field.hpp"
#include "twist/kernels.hpp"
#include "twist/report.hpp"
#include "twist/twist_formula.hpp"

#ifndef TWISTCOUNT_PATH
#error "TWISTCOUNT_PATH must point at the twistcount binary"
#endif

namespace {

using namespace twist;
using formula::TwistParams;
using formula::ValuationConvention;
using intmath::Rational;
using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run(const std::string& args) {
    const std::string command = std::string(TWISTCOUNT_PATH) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) throw std::runtime_error("cannot run " + command);
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0) output.append(buffer.data(), got);
    const int status = pclose(pipe.release());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

template <typename F>
void for_each_params(u64 max_n, F&& f) {
    for (u64 n = 1; n <= max_n; ++n) {
        for (u64 s = 1; s <= n; ++s) {
            if (std::gcd(s, n) == 1) f(TwistParams(n, s));
        }
    }
}

Outcome ac1() {
    const auto start = Clock::now();
    const report::ReportRow row = report::profile_row(TwistParams(2, 1), ValuationConvention::capped);
    const double elapsed = ms_since(start);
    const std::map<u64, Rational> expected{{1, 1}, {2, 1}};
    bool ok = row.agree && row.profile("moebius").total == Rational(2);
    for (const auto& [label, profile] : row.profiles) ok = ok && profile.entries == expected;

    const CommandResult cli = run("profile --n 2 --s 1 --format json");
    const auto doc = report::Json::parse(cli.output);
    const bool cli_ok = cli.exit_code == 0 && doc["total"] == 2 &&
                        doc["profile"] == report::Json::parse(R"({"1":1,"2":1})") && doc["agree"] == true;
    const double cli_ms = doc["meta"]["elapsed_ms"].get<double>();
    std::ostringstream out;
    out << "N=2, {1:1, 2:1} by closed form, Moebius and oracle; library " << elapsed << " ms, CLI compute "
        << cli_ms << " ms, CLI exit " << cli.exit_code;
    return {ok && cli_ok && elapsed < 1.0 && cli_ms < 1.0, out.str()};
}

Outcome ac2() {
    int checked = 0;
    for (u64 n = 1; n <= 60; ++n) {
        const TwistParams params(n, 1);
        for (u64 d : intmath::divisors(n)) {
            if (formula::twist_count_moebius(d, params) != intmath::euler_phi(d)) {
                return {false, "n=" + std::to_string(n) + " d=" + std::to_string(d)};
            }
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " (n, d) pairs with N(d) = phi(d)"};
}

Outcome ac3() {
    const auto start = Clock::now();
    const auto result = kernels::sweep_serial({120, ValuationConvention::capped});
    const double elapsed = ms_since(start);
    u64 checks = 0;
    std::string first_failure;
    for (const auto& row : result.rows) {
        for (const auto& c : row.degrees) {
            checks += 2;
            if ((c.moebius != c.oracle || c.kernel_c != c.kernel_tau) && first_failure.empty()) {
                first_failure = "n=" + std::to_string(row.n) + " s=" + std::to_string(row.s) + " d=" + std::to_string(c.d);
            }
        }
        ++checks;
        const u64 g = std::gcd((row.s - 1) % row.n, row.n);
        if ((row.oracle_sum != g || row.total != g || row.quotient_size != g) && first_failure.empty()) {
            first_failure = "totals at n=" + std::to_string(row.n) + " s=" + std::to_string(row.s);
        }
    }
    std::ostringstream out;
    out << result.rows.size() << " (n, s) rows, " << checks << " exact checks, single-threaded " << elapsed / 1000.0
        << " s";
    if (!first_failure.empty()) out << "; first failure " << first_failure;
    return {first_failure.empty() && elapsed <= 60000.0, out.str()};
}

Outcome ac4() {
    u64 rows = 0;
    for (const auto& [n, s] : kernels::sweep_grid(120)) {
        const TwistParams params(n, s);
        const u64 total = formula::total_twists(params);
        if (n % total != 0) return {false, "N does not divide n at n=" + std::to_string(n)};
        if (n % 2 == 0 && (total == n) != (s == 1)) return {false, "N = n iff s = 1 fails at n=" + std::to_string(n)};
        ++rows;
    }
    std::mt19937_64 rng(7);
    int sampled = 0;
    int beyond = 0;
    while (sampled < 100) {
        const u64 n = 1 + rng() % 120;
        const u64 s = 1 + rng() % n;
        const u64 d = 1 + rng() % (3 * n);
        if (std::gcd(s, n) != 1 || n % d == 0) continue;
        const TwistParams params(n, s);
        if (formula::twist_count_moebius(d, params) != 0 ||
            cohomology::oracle_exact_degree_count(cohomology::CyclicModule(n, s), d) != 0) {
            return {false, "N(d) != 0 at n=" + std::to_string(n) + " d=" + std::to_string(d)};
        }
        ++sampled;
        beyond += d > n;
    }
    return {beyond > 0, std::to_string(rows) + " rows with N | n; 100 triples with d not dividing n (" +
                            std::to_string(beyond) + " with d > n) give N(d) = 0"};
}

Outcome ac5() {
    const auto capped = kernels::sweep_parallel({120, ValuationConvention::capped});
    u64 compared = 0;
    u64 mismatches = 0;
    std::string first;
    for (const auto& row : capped.rows) {
        for (const auto& c : row.degrees) {
            ++compared;
            if (!(c.closed_form == Rational(static_cast<std::int64_t>(c.moebius)))) {
                if (mismatches++ == 0) {
                    first = "n=" + std::to_string(row.n) + " s=" + std::to_string(row.s) + " d=" + std::to_string(c.d) +
                            ": closed form " + c.closed_form.to_string() + " vs " + std::to_string(c.moebius);
                }
            }
        }
    }
    const auto exact = kernels::sweep_serial({6, ValuationConvention::exact});
    bool documented = false;
    for (const auto& c : exact.counterexamples) {
        documented = documented || (c.n == 6 && c.s == 5 && c.d == 2 && c.check == "closed_form_vs_oracle" &&
                                    c.detail == "closed_form=0 moebius=1 oracle=1");
    }
    std::ostringstream out;
    out << "capped reading: " << mismatches << " of " << compared << " closed-form values differ from Moebius";
    if (mismatches > 0) out << " (first " << first << ")";
    out << "; exact reading lists (6, 5, 2) closed form 0 vs oracle 1: " << (documented ? "yes" : "no");
    return {mismatches == 0 && documented, out.str()};
}

Outcome ac6() {
    u64 checked = 0;
    for_each_params(120, [&](const TwistParams& params) {
        const cohomology::CyclicModule mod(params.n(), params.s());
        for (u64 d : intmath::divisors(params.n())) {
            if (mod.frobenius(1 % params.n(), d) != 1 % params.n()) continue;
            if (cohomology::h1_finite_cyclic(mod, d) != cohomology::kernel_tau_d(mod, d)) {
                throw std::runtime_error("inflation-restriction fails at n=" + std::to_string(params.n()));
            }
            ++checked;
        }
    });
    return {checked > 0, std::to_string(checked) + " instances with s^d = 1 (mod n)"};
}

Outcome ac7() {
    const auto start = Clock::now();
    const std::array<u64, 7> primes{5, 7, 11, 13, 17, 19, 23};
    const std::array<unsigned, 1> r1{1};
    const std::array<u64, 2> squares{5, 7};
    const std::array<unsigned, 1> r2{2};
    auto rows = kernels::survey_parallel(primes, r1);
    for (auto& row : kernels::survey_parallel(squares, r2)) rows.push_back(std::move(row));
    const double elapsed = ms_since(start);
    u64 agreeing = 0;
    for (const auto& row : rows) {
        bool degrees_divide = true;
        for (const auto& c : row.report.classes) degrees_divide = degrees_divide && row.report.M % c.degree == 0;
        agreeing += row.class_count_matches() && row.matches_phi() && row.matches_formula() && degrees_divide;
    }
    std::ostringstream out;
    out << agreeing << " of " << rows.size() << " j-classes give M classes with the phi profile and match the "
        << "formula at (m, q mod m); " << elapsed / 1000.0 << " s";
    return {agreeing == rows.size() && elapsed <= 120000.0, out.str()};
}

Outcome ac8() {
    u64 pairs = 0;
    for (u64 p = 5; p <= 169; ++p) {
        if (!intmath::is_prime(p)) continue;
        for (unsigned r = 1; intmath::checked_pow(p, r) <= 169; ++r) {
            const ff::FiniteField& f = ff::FiniteField::get(p, r);
            const auto elements = f.elements();
            for (u64 m = 1; m <= 12; ++m) {
                std::set<u64> powers;
                for (const auto& a : elements) {
                    if (!a.is_zero()) powers.insert(a.pow(m).index());
                }
                if (powers.size() != (f.order() - 1) / std::gcd(m, f.order() - 1)) {
                    return {false, f.name() + " m=" + std::to_string(m)};
                }
                ++pairs;
            }
        }
    }
    return {true, std::to_string(pairs) + " (q, m) pairs with |(k^x)^m| = (q-1)/gcd(m, q-1)"};
}

Outcome ac9() {
    const CommandResult first = run("sweep --max-n 60 --format json");
    const CommandResult second = run("sweep --max-n 60 --format json");
    const std::string a = report::Json::parse(first.output)["rows"].dump();
    const std::string b = report::Json::parse(second.output)["rows"].dump();
    std::ostringstream out;
    out << "rows payloads of " << a.size() << " bytes, identical: " << (a == b ? "yes" : "no");
    return {a == b && !a.empty(), out.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 profile n=2 s=1", ac1},      {"AC2 trivial action", ac2},        {"AC3 oracle equivalence", ac3},
        {"AC4 divisibility", ac4},         {"AC5 closed-form agreement", ac5}, {"AC6 inflation-restriction", ac6},
        {"AC7 elliptic-curve twists", ac7}, {"AC8 m-th power counts", ac8},    {"AC9 determinism", ac9},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += !outcome.pass;
        std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << " -- " << outcome.detail << '\n';
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
    return failures == 0 ? 0 : 1;
}
