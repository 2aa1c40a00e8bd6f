// twistcount: degree profiles of twists, verification sweeps, and the
// elliptic-curve survey.
//
// Exit codes: 0 all methods agree, 1 usage or precondition error,
// 2 completed but some cross-check disagreed.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "twist/ec_twist_lab.hpp"
#include "twist/kernels.hpp"
#include "twist/report.hpp"
#include "twist/twist_formula.hpp"

namespace {

using twist::report::Format;
using u64 = std::uint64_t;

constexpr u64 kMaxSweepN = 300;
constexpr unsigned kMaxSurveyDegree = 2;

constexpr int kExitAgree = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

twist::report::Meta make_meta(std::string command, int argc, char** argv, int threads, const Timer& timer) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return {std::move(command), std::move(args), threads, timer.elapsed_ms()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count twists by degree: closed form, Moebius inversion, and brute force."};
    app.require_subcommand(1);

    std::string format_text = "text";
    std::string valuation_text = "capped";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    };
    const auto add_valuation = [&](CLI::App* sub) {
        sub->add_option("--valuation", valuation_text, "Valuation reading for the closed form")
            ->check(CLI::IsMember({"capped", "exact"}));
    };

    u64 n = 0, s = 0;
    auto* profile = app.add_subcommand("profile", "Degree profile for one (n, s) by every method");
    profile->add_option("--n", n, "Order of the cyclic automorphism group")->required();
    profile->add_option("--s", s, "Frobenius multiplier, a unit in [1, n]")->required();
    add_format(profile);
    add_valuation(profile);

    u64 max_n = 0;
    bool serial = false;
    auto* sweep = app.add_subcommand("sweep", "Cross-check every method for all n <= max-n");
    sweep->add_option("--max-n", max_n, "Largest n (1.." + std::to_string(kMaxSweepN) + ")")->required();
    sweep->add_flag("--serial", serial, "Use the single-threaded reference kernel");
    add_format(sweep);
    add_valuation(sweep);

    std::vector<u64> primes;
    std::vector<unsigned> degrees{1};
    auto* survey = app.add_subcommand("ec-survey", "Enumerate twist classes of elliptic curves over F_{p^r}");
    survey->add_option("--p", primes, "Primes p >= 5")->required()->delimiter(',');
    survey->add_option("--r", degrees, "Extension degrees r <= " + std::to_string(kMaxSurveyDegree))->delimiter(',');
    survey->add_flag("--serial", serial, "Use the single-threaded reference kernel");
    add_format(survey);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitAgree : kExitUsage;
    }

    try {
        const Format format = twist::report::parse_format(format_text);
        const auto convention = twist::formula::parse_convention(valuation_text);
        const Timer timer;

        if (*profile) {
            const twist::formula::TwistParams params(n, s);
            const auto row = twist::report::profile_row(params, convention);
            std::cout << twist::report::render_profile(row, format, make_meta("profile", argc, argv, 1, timer));
            return row.agree ? kExitAgree : kExitDisagree;
        }

        if (*sweep) {
            if (max_n < 1 || max_n > kMaxSweepN) {
                throw std::invalid_argument("--max-n must lie in [1, " + std::to_string(kMaxSweepN) + "]");
            }
            const twist::kernels::SweepOptions options{max_n, convention};
            const auto result = serial ? twist::kernels::sweep_serial(options) : twist::kernels::sweep_parallel(options);
            const int threads = serial ? 1 : omp_get_max_threads();
            std::cout << twist::report::render_sweep(result, format, make_meta("sweep", argc, argv, threads, timer));
            return result.disagreements() == 0 ? kExitAgree : kExitDisagree;
        }

        for (unsigned r : degrees) {
            if (r < 1 || r > kMaxSurveyDegree) {
                throw std::invalid_argument("--r must lie in [1, " + std::to_string(kMaxSurveyDegree) + "]");
            }
        }
        for (u64 p : primes) {
            if (p < 5) throw std::invalid_argument("--p: characteristic " + std::to_string(p) + " is excluded; need p >= 5");
        }
        const auto rows = serial ? twist::ec::survey(primes, degrees) : twist::kernels::survey_parallel(primes, degrees);
        const int threads = serial ? 1 : omp_get_max_threads();
        std::cout << twist::report::render_survey(rows, format, make_meta("ec-survey", argc, argv, threads, timer));
        for (const auto& row : rows) {
            if (!row.agree()) return kExitDisagree;
        }
        return kExitAgree;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
