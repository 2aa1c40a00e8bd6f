#include "twist/report.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "twist/cyclic_cohomology.hpp"

namespace twist::report {

namespace {

constexpr const char* kProfileCsvHeader = "n,s,d,closed_form,moebius,oracle,agree";
constexpr const char* kSurveyCsvHeader = "p,r,q,j,m,M,d,enumerated,phi,moebius,closed_form,agree";

u64 parse_degree_key(const std::string& key) {
    u64 d = 0;
    const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), d);
    if (ec != std::errc{} || end != key.data() + key.size() || d == 0) {
        throw std::invalid_argument("report: bad degree key '" + key + "'");
    }
    return d;
}

Rational to_rational(u64 value) { return Rational(static_cast<std::int64_t>(value)); }

Profile rational_profile(const std::map<u64, Rational>& entries) {
    Profile p{entries, Rational{}};
    for (const auto& [d, v] : entries) p.total = p.total + v;
    return p;
}

Json meta_json(const Meta& meta) {
    Json j = Json::object();
    j["command"] = meta.command;
    j["args"] = meta.args;
    j["threads"] = meta.threads;
    j["elapsed_ms"] = meta.elapsed_ms;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string param_text(const ParamValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    return std::get<std::string>(v);
}

const ParamValue& param(const ReportRow& row, std::string_view key) {
    for (const auto& [k, v] : row.params) {
        if (k == key) return v;
    }
    throw std::out_of_range("report: row has no parameter '" + std::string(key) + "'");
}

bool flag(const ReportRow& row, std::string_view key) {
    for (const auto& [k, v] : row.flags) {
        if (k == key) return v;
    }
    return true;
}

// One CSV / table line per degree, over the degrees of the first profile.
void append_profile_csv(std::ostringstream& out, const ReportRow& row) {
    const std::string n = param_text(param(row, "n"));
    const std::string s = param_text(param(row, "s"));
    const Profile& closed = row.profile("closed_form");
    const Profile& moebius = row.profile("moebius");
    const Profile& oracle = row.profile("oracle");
    for (const auto& [d, value] : oracle.entries) {
        const Rational c = closed.entries.at(d);
        const Rational m = moebius.entries.at(d);
        out << n << ',' << s << ',' << d << ',' << c.to_string() << ',' << m.to_string() << ','
            << value.to_string() << ',' << (c == value && m == value ? "true" : "false") << '\n';
    }
}

void append_profile_table(std::ostringstream& out, const ReportRow& row) {
    out << std::setw(6) << "d" << std::setw(13) << "closed_form" << std::setw(9) << "moebius" << std::setw(8)
        << "oracle" << std::setw(7) << "agree" << '\n';
    const Profile& closed = row.profile("closed_form");
    const Profile& moebius = row.profile("moebius");
    const Profile& oracle = row.profile("oracle");
    for (const auto& [d, value] : oracle.entries) {
        const Rational c = closed.entries.at(d);
        const Rational m = moebius.entries.at(d);
        out << std::setw(6) << d << std::setw(13) << c.to_string() << std::setw(9) << m.to_string()
            << std::setw(8) << value.to_string() << std::setw(7) << yes_no(c == value && m == value) << '\n';
    }
    out << std::setw(6) << "total" << std::setw(13) << closed.total.to_string() << std::setw(9)
        << moebius.total.to_string() << std::setw(8) << oracle.total.to_string() << '\n';
}

std::string counterexample_text(const kernels::Counterexample& c) {
    std::string line = "n=" + std::to_string(c.n) + " s=" + std::to_string(c.s);
    if (c.d != 0) line += " d=" + std::to_string(c.d);
    line += " " + c.check;
    if (!c.detail.empty()) line += ": " + c.detail;
    return line;
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "text") return Format::text;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected text, json or csv)");
}

const Profile& ReportRow::profile(std::string_view label) const {
    for (const auto& [k, v] : profiles) {
        if (k == label) return v;
    }
    throw std::out_of_range("report: row has no profile '" + std::string(label) + "'");
}

Json to_json(const Rational& value) {
    if (value.is_integer()) return value.numerator();
    return value.to_string();
}

Rational rational_from_json(const Json& value) {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    throw std::invalid_argument("report: expected an integer or \"a/b\", got " + value.dump());
}

Json to_json(const ReportRow& row) {
    Json params = Json::object();
    for (const auto& [k, v] : row.params) {
        std::visit([&](const auto& x) { params[k] = x; }, v);
    }
    Json profiles = Json::object();
    Json totals = Json::object();
    for (const auto& [label, p] : row.profiles) {
        Json entries = Json::object();
        for (const auto& [d, v] : p.entries) entries[std::to_string(d)] = to_json(v);
        profiles[label] = std::move(entries);
        totals[label] = to_json(p.total);
    }
    Json flags = Json::object();
    for (const auto& [k, v] : row.flags) flags[k] = v;

    Json j = Json::object();
    j["params"] = std::move(params);
    j["profiles"] = std::move(profiles);
    j["totals"] = std::move(totals);
    j["flags"] = std::move(flags);
    j["agree"] = row.agree;
    return j;
}

ReportRow row_from_json(const Json& value) {
    try {
        ReportRow row;
        for (const auto& [k, v] : value.at("params").items()) {
            if (v.is_number_integer()) {
                row.params.emplace_back(k, v.get<std::int64_t>());
            } else if (v.is_string()) {
                row.params.emplace_back(k, v.get<std::string>());
            } else {
                throw std::invalid_argument("report: parameter '" + k + "' is neither integer nor string");
            }
        }
        const Json& totals = value.at("totals");
        for (const auto& [label, entries] : value.at("profiles").items()) {
            Profile p;
            for (const auto& [key, v] : entries.items()) p.entries.emplace(parse_degree_key(key), rational_from_json(v));
            p.total = rational_from_json(totals.at(label));
            row.profiles.emplace_back(label, std::move(p));
        }
        for (const auto& [k, v] : value.at("flags").items()) row.flags.emplace_back(k, v.get<bool>());
        row.agree = value.at("agree").get<bool>();
        return row;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report: malformed row: ") + e.what());
    }
}

std::vector<ReportRow> parse_rows(std::string_view document) {
    Json j;
    try {
        j = Json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report: invalid JSON: ") + e.what());
    }
    if (!j.contains("rows") || !j["rows"].is_array()) throw std::invalid_argument("report: no \"rows\" array");
    std::vector<ReportRow> rows;
    for (const Json& r : j["rows"]) rows.push_back(row_from_json(r));
    return rows;
}

Profile to_profile(const DegreeProfile& profile) {
    Profile p;
    for (const auto& [d, v] : profile.entries) p.entries.emplace(d, to_rational(v));
    p.total = to_rational(profile.total);
    return p;
}

ReportRow profile_row(const formula::TwistParams& params, formula::ValuationConvention convention) {
    const cohomology::CyclicModule mod(params.n(), params.s());
    const DegreeProfile oracle = cohomology::degree_profile_oracle(mod);

    std::map<u64, Rational> moebius_entries;
    for (const auto& [d, v] : oracle.entries) moebius_entries.emplace(d, to_rational(formula::twist_count_moebius(d, params)));
    Profile moebius{std::move(moebius_entries), to_rational(formula::total_twists(params))};
    Profile closed = rational_profile(formula::closed_form_values(params, convention));
    Profile oracle_profile = to_profile(oracle);

    ReportRow row;
    row.params = {{"n", static_cast<std::int64_t>(params.n())},
                  {"s", static_cast<std::int64_t>(params.s())},
                  {"valuation", std::string(formula::to_string(convention))}};
    row.flags = {{"moebius_vs_oracle", moebius.entries == oracle_profile.entries},
                 {"closed_form_vs_oracle", closed.entries == oracle_profile.entries},
                 {"total_vs_quotient", moebius.total == oracle_profile.total}};
    row.profiles = {{"closed_form", std::move(closed)}, {"moebius", std::move(moebius)}, {"oracle", std::move(oracle_profile)}};
    row.agree = std::all_of(row.flags.begin(), row.flags.end(), [](const auto& f) { return f.second; });
    return row;
}

ReportRow sweep_row(const kernels::SweepRow& r) {
    std::map<u64, Rational> closed, moebius, oracle;
    bool moebius_ok = true, closed_ok = true, kernel_ok = true, sequence_ok = true, inflation_ok = true;
    for (const kernels::DegreeCheck& c : r.degrees) {
        closed.emplace(c.d, c.closed_form);
        moebius.emplace(c.d, to_rational(c.moebius));
        oracle.emplace(c.d, to_rational(c.oracle));
        moebius_ok = moebius_ok && c.moebius == c.oracle;
        closed_ok = closed_ok && c.closed_form == to_rational(c.oracle);
        kernel_ok = kernel_ok && c.kernel_c == c.kernel_tau;
        sequence_ok = sequence_ok && c.exact_sequence;
        inflation_ok = inflation_ok && c.inflation_restriction.value_or(true);
    }

    ReportRow row;
    row.params = {{"n", static_cast<std::int64_t>(r.n)}, {"s", static_cast<std::int64_t>(r.s)}};
    row.profiles = {{"closed_form", rational_profile(closed)},
                    {"moebius", Profile{std::move(moebius), to_rational(r.total)}},
                    {"oracle", Profile{std::move(oracle), to_rational(r.oracle_sum)}}};
    row.flags = {{"moebius_vs_oracle", moebius_ok},
                 {"closed_form_vs_oracle", closed_ok},
                 {"kernel_c_vs_tau", kernel_ok},
                 {"exact_sequence", sequence_ok},
                 {"inflation_restriction", inflation_ok},
                 {"totals", r.total == r.quotient_size && r.oracle_sum == r.total && r.n % r.total == 0}};
    row.agree = std::all_of(row.flags.begin(), row.flags.end(), [](const auto& f) { return f.second; });
    return row;
}

ReportRow survey_row(const ec::SurveyRow& r) {
    const ff::FiniteField& field = r.representative.field();
    ReportRow row;
    row.params = {{"p", static_cast<std::int64_t>(field.characteristic())},
                  {"r", static_cast<std::int64_t>(field.degree())},
                  {"q", static_cast<std::int64_t>(field.order())},
                  {"j", r.j.to_string()},
                  {"a", r.representative.a().to_string()},
                  {"b", r.representative.b().to_string()},
                  {"m", static_cast<std::int64_t>(r.report.m)},
                  {"M", static_cast<std::int64_t>(r.report.M)},
                  {"n", static_cast<std::int64_t>(r.params.n())},
                  {"s", static_cast<std::int64_t>(r.params.s())},
                  {"family_size", static_cast<std::int64_t>(r.report.family_size)}};
    row.profiles = {{"enumerated", to_profile(r.report.profile)},
                    {"phi", to_profile(r.phi_prediction)},
                    {"moebius", to_profile(r.formula_prediction)},
                    {"closed_form", rational_profile(r.closed_form)}};
    row.flags = {{"class_count_matches", r.class_count_matches()},
                 {"matches_phi", r.matches_phi()},
                 {"matches_formula", r.matches_formula()},
                 {"closed_form_matches", r.closed_form_matches()}};
    row.agree = r.agree();
    return row;
}

std::string render_profile(const ReportRow& row, Format format, const Meta& meta) {
    std::ostringstream out;
    switch (format) {
        case Format::json: {
            const Profile& moebius = row.profile("moebius");
            Json entries = Json::object();
            for (const auto& [d, v] : moebius.entries) entries[std::to_string(d)] = to_json(v);
            Json j = Json::object();
            j["meta"] = meta_json(meta);
            j["total"] = to_json(moebius.total);
            j["profile"] = std::move(entries);
            j["agree"] = row.agree;
            j["rows"] = Json::array({to_json(row)});
            return dump(j);
        }
        case Format::csv:
            out << kProfileCsvHeader << '\n';
            append_profile_csv(out, row);
            return out.str();
        case Format::text:
            out << "n = " << param_text(param(row, "n")) << ", s = " << param_text(param(row, "s"))
                << ", valuation = " << param_text(param(row, "valuation")) << '\n';
            append_profile_table(out, row);
            out << "agree: " << yes_no(row.agree) << '\n';
            return out.str();
    }
    throw std::logic_error("render_profile: unhandled format");
}

std::string render_sweep(const kernels::SweepResult& result, Format format, const Meta& meta) {
    std::ostringstream out;
    switch (format) {
        case Format::json: {
            Json counterexamples = Json::array();
            for (const auto& c : result.counterexamples) {
                counterexamples.push_back(Json{{"n", c.n}, {"s", c.s}, {"d", c.d}, {"check", c.check}, {"detail", c.detail}});
            }
            Json rows = Json::array();
            for (const auto& r : result.rows) rows.push_back(to_json(sweep_row(r)));
            Json j = Json::object();
            j["meta"] = meta_json(meta);
            j["checks"] = result.checks;
            j["disagreements"] = result.disagreements();
            j["counterexamples"] = std::move(counterexamples);
            j["rows"] = std::move(rows);
            return dump(j);
        }
        case Format::csv:
            out << kProfileCsvHeader << '\n';
            for (const auto& r : result.rows) append_profile_csv(out, sweep_row(r));
            return out.str();
        case Format::text:
            out << "checks: " << result.checks << ", disagreements: " << result.disagreements() << '\n';
            for (const auto& c : result.counterexamples) out << "  " << counterexample_text(c) << '\n';
            return out.str();
    }
    throw std::logic_error("render_sweep: unhandled format");
}

std::string render_survey(const std::vector<ec::SurveyRow>& rows, Format format, const Meta& meta) {
    std::ostringstream out;
    switch (format) {
        case Format::json: {
            Json list = Json::array();
            for (const auto& r : rows) list.push_back(to_json(survey_row(r)));
            Json j = Json::object();
            j["meta"] = meta_json(meta);
            j["rows"] = std::move(list);
            return dump(j);
        }
        case Format::csv:
            out << kSurveyCsvHeader << '\n';
            for (const auto& r : rows) {
                const ReportRow row = survey_row(r);
                const std::string prefix = param_text(param(row, "p")) + ',' + param_text(param(row, "r")) + ',' +
                                           param_text(param(row, "q")) + ',' + param_text(param(row, "j")) + ',' +
                                           param_text(param(row, "m")) + ',' + param_text(param(row, "M")) + ',';
                for (const auto& [d, v] : row.profile("enumerated").entries) {
                    out << prefix << d << ',' << v.to_string() << ',' << row.profile("phi").entries.at(d).to_string()
                        << ',' << row.profile("moebius").entries.at(d).to_string() << ','
                        << row.profile("closed_form").entries.at(d).to_string() << ','
                        << (row.agree ? "true" : "false") << '\n';
                }
            }
            return out.str();
        case Format::text: {
            std::size_t agreeing = 0;
            for (const auto& r : rows) {
                const ReportRow row = survey_row(r);
                agreeing += row.agree ? 1 : 0;
                out << r.representative.field().name() << "  j = " << param_text(param(row, "j")) << "  ("
                    << r.representative.to_string() << ")  m = " << r.report.m << ", M = " << r.report.M
                    << ", n = " << r.params.n() << ", s = " << r.params.s() << '\n';
                out << std::setw(6) << "d" << std::setw(12) << "enumerated" << std::setw(6) << "phi" << std::setw(9)
                    << "moebius" << std::setw(13) << "closed_form" << '\n';
                for (const auto& [d, v] : row.profile("enumerated").entries) {
                    out << std::setw(6) << d << std::setw(12) << v.to_string() << std::setw(6)
                        << row.profile("phi").entries.at(d).to_string() << std::setw(9)
                        << row.profile("moebius").entries.at(d).to_string() << std::setw(13)
                        << row.profile("closed_form").entries.at(d).to_string() << '\n';
                }
                out << "  classes = " << r.report.classes.size() << ", agree: " << yes_no(row.agree);
                if (!flag(row, "closed_form_matches")) out << " (closed form differs)";
                out << "\n\n";
            }
            out << "rows: " << rows.size() << ", agreeing: " << agreeing << '\n';
            return out.str();
        }
    }
    throw std::logic_error("render_survey: unhandled format");
}

}  // namespace twist::report
