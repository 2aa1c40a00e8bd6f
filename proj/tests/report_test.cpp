#include <doctest.h>

#include <array>
#include <stdexcept>

#include "twist/report.hpp"

using namespace twist::report;
using twist::formula::TwistParams;
using twist::formula::ValuationConvention;

TEST_CASE("format parsing") {
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("text") == Format::text);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("rationals serialize as integers or strings") {
    CHECK(to_json(Rational(3)) == Json(3));
    CHECK(to_json(Rational(2, 3)) == Json("2/3"));
    CHECK(rational_from_json(Json("2/3")) == Rational(2, 3));
    CHECK(rational_from_json(Json(-4)) == Rational(-4));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("profile rows") {
    const ReportRow row = profile_row(TwistParams(2, 1), ValuationConvention::capped);
    CHECK(row.agree);
    CHECK(row.profile("oracle").entries == std::map<u64, Rational>{{1, 1}, {2, 1}});
    CHECK(row.profile("moebius").total == Rational(2));
    REQUIRE(row.profiles.size() == 3);
    CHECK(row.profiles[0].first == "closed_form");
    CHECK(row.profiles[1].first == "moebius");
    CHECK(row.profiles[2].first == "oracle");
    CHECK_THROWS_AS(row.profile("nope"), std::out_of_range);
}

TEST_CASE("rows round-trip through JSON") {
    std::vector<ReportRow> rows;
    for (u64 n = 1; n <= 24; ++n) {
        for (u64 s = 1; s <= n; ++s) {
            if (twist::intmath::gcd(s, n) != 1) continue;
            rows.push_back(profile_row(TwistParams(n, s), ValuationConvention::exact));
            rows.push_back(sweep_row(twist::kernels::sweep_row(n, s, ValuationConvention::capped)));
        }
    }
    const std::array<u64, 2> primes{5, 7};
    const std::array<unsigned, 2> degrees{1, 2};
    for (const auto& r : twist::ec::survey(primes, degrees)) rows.push_back(survey_row(r));
    for (const ReportRow& row : rows) {
        REQUIRE(row_from_json(to_json(row)) == row);
        REQUIRE(row_from_json(Json::parse(to_json(row).dump())) == row);
    }
}

TEST_CASE("rendered documents parse back to their rows") {
    const Meta meta{"sweep", {"--max-n", "12"}, 1, 0.5};
    const auto result = twist::kernels::sweep_serial({12, ValuationConvention::capped});
    const auto parsed = parse_rows(render_sweep(result, Format::json, meta));
    REQUIRE(parsed.size() == result.rows.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) REQUIRE(parsed[i] == sweep_row(result.rows[i]));
    CHECK_THROWS_AS(parse_rows("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rows("not json"), std::invalid_argument);
}

TEST_CASE("profile renderings") {
    const Meta meta{"profile", {}, 1, 0.0};
    const ReportRow row = profile_row(TwistParams(2, 1), ValuationConvention::capped);
    const Json doc = Json::parse(render_profile(row, Format::json, meta));
    CHECK(doc["total"] == 2);
    CHECK(doc["profile"] == Json::parse(R"({"1":1,"2":1})"));
    CHECK(doc["agree"] == true);
    CHECK(render_profile(row, Format::csv, meta) ==
          "n,s,d,closed_form,moebius,oracle,agree\n2,1,1,1,1,1,true\n2,1,2,1,1,1,true\n");
    const std::string text = render_profile(profile_row(TwistParams(8, 3), ValuationConvention::capped), Format::text, meta);
    CHECK(text.find("agree: no") != std::string::npos);
}

TEST_CASE("sweep text lists counterexamples") {
    const Meta meta{"sweep", {}, 1, 0.0};
    const auto result = twist::kernels::sweep_serial({6, ValuationConvention::exact});
    const std::string text = render_sweep(result, Format::text, meta);
    CHECK(text.rfind("checks: " + std::to_string(result.checks) + ", disagreements: ", 0) == 0);
    CHECK(text.find("n=6 s=5 d=2 closed_form_vs_oracle: closed_form=0 moebius=1 oracle=1") != std::string::npos);
}

TEST_CASE("survey CSV has the fixed header") {
    const std::array<u64, 1> primes{5};
    const std::array<unsigned, 1> degrees{1};
    const std::string csv = render_survey(twist::ec::survey(primes, degrees), Format::csv, {});
    CHECK(csv.rfind("p,r,q,j,m,M,d,enumerated,phi,moebius,closed_form,agree\n5,1,5,0,6,2,1,1,1,1,1,true\n", 0) == 0);
}
