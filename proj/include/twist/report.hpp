#pragma once

// Report rows and their text / CSV / JSON renderings. Data payloads are
// deterministic; timing and thread counts live only under "meta".

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "twist/ec_twist_lab.hpp"
#include "twist/intmath.hpp"
#include "twist/kernels.hpp"
#include "twist/twist_formula.hpp"

namespace twist::report {

using u64 = std::uint64_t;
using intmath::Rational;
using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(std::string_view text);

using ParamValue = std::variant<std::int64_t, std::string>;

struct Profile {
    std::map<u64, Rational> entries;
    Rational total;

    friend bool operator==(const Profile&, const Profile&) = default;
};

struct ReportRow {
    std::vector<std::pair<std::string, ParamValue>> params;
    std::vector<std::pair<std::string, Profile>> profiles;  // fixed method order
    std::vector<std::pair<std::string, bool>> flags;
    bool agree = false;

    const Profile& profile(std::string_view label) const;

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Run metadata; excluded from any comparison of payloads.
struct Meta {
    std::string command;
    std::vector<std::string> args;
    int threads = 1;
    double elapsed_ms = 0.0;
};

Json to_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json to_json(const ReportRow& row);
/// Inverse of to_json(ReportRow); throws std::invalid_argument on malformed input.
ReportRow row_from_json(const Json& value);

/// The "rows" array of a rendered JSON report.
std::vector<ReportRow> parse_rows(std::string_view document);

Profile to_profile(const DegreeProfile& profile);

/// closed_form, moebius and oracle profiles for one (n, s).
ReportRow profile_row(const formula::TwistParams& params, formula::ValuationConvention convention);
ReportRow sweep_row(const kernels::SweepRow& row);
/// enumerated, phi, moebius, closed_form; closed_form_matches is informational and not part of agree.
ReportRow survey_row(const ec::SurveyRow& row);

std::string render_profile(const ReportRow& row, Format format, const Meta& meta);
std::string render_sweep(const kernels::SweepResult& result, Format format, const Meta& meta);
std::string render_survey(const std::vector<ec::SurveyRow>& rows, Format format, const Meta& meta);

}  // namespace twist::report
