#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bondrisk/countries.hpp"
#include "bondrisk/errors.hpp"
#include "bondrisk/riskfree.hpp"

using namespace bondrisk;

namespace {

std::vector<CountryDatum> euro_panel() {
    return {
        {"Austria", 0.0370, 381.1},  {"Belgium", 0.0372, 436.7},
        {"Finland", 0.0359, 232.1},  {"France", 0.0354, 2625.0},
        {"Germany", 0.0333, 3107.0}, {"Greece", 0.0446, 354.3},
        {"Ireland", 0.0474, 219.2},  {"Italy", 0.0393, 2073.3},
        {"Holland", 0.0357, 785.5},  {"Portugal", 0.0388, 219.9},
        {"Spain", 0.0379, 1403.7},
    };
}

}  // namespace

TEST_CASE("GDP-weighted yield over the euro panel") {
    const double w = weighted_average_ytm(euro_panel());
    CHECK(w == doctest::Approx(0.03653666).epsilon(1e-6));
    CHECK(std::abs(w * 100.0 - 3.65) <= 0.03);
}

TEST_CASE("weighted yield degenerate cases") {
    const std::vector<CountryDatum> one = {{"Solo", 0.042, 123.0}};
    CHECK(weighted_average_ytm(one) == 0.042);

    const std::vector<CountryDatum> pair = {{"A", 0.03, 50.0}, {"B", 0.05, 50.0}};
    CHECK(weighted_average_ytm(pair) == doctest::Approx(0.04).epsilon(1e-15));

    CHECK_THROWS_AS(weighted_average_ytm({}), ValidationError);
    const std::vector<CountryDatum> bad = {{"A", 0.03, 0.0}};
    CHECK_THROWS_AS(weighted_average_ytm(bad), ValidationError);
    const std::vector<CountryDatum> neg = {{"A", 0.03, -2.0}};
    CHECK_THROWS_AS(weighted_average_ytm(neg), ValidationError);
}

TEST_CASE("weighted yield is invariant to GDP rescaling") {
    std::vector<CountryDatum> scaled = euro_panel();
    for (CountryDatum& c : scaled) c.gdp *= 1e-3;
    CHECK(weighted_average_ytm(scaled) ==
          doctest::Approx(weighted_average_ytm(euro_panel())).epsilon(1e-12));
}

TEST_CASE("real rate via the multiplicative deflation") {
    const double real = fisher_real(0.0365, 0.015);
    CHECK(real == doctest::Approx((1.0365 / 1.015) - 1.0).epsilon(1e-15));
    CHECK(std::abs(real - 0.0212) <= 0.0001);

    CHECK(fisher_real(0.04, 0.0) == doctest::Approx(0.04).epsilon(1e-15));
    CHECK(fisher_real(0.0, 0.0) == 0.0);
    CHECK_THROWS_AS(fisher_real(0.03, -1.0), ValidationError);
    CHECK_THROWS_AS(fisher_real(-1.0, 0.02), ValidationError);
}

TEST_CASE("nominal rate via the multiplicative reflation") {
    const double nominal = fisher_nominal(0.02118, 0.0332);
    CHECK(nominal == doctest::Approx(1.02118 * 1.0332 - 1.0).epsilon(1e-15));
    CHECK(std::abs(nominal - 0.05509) < 1e-5);

    CHECK(fisher_nominal(0.0, 0.025) == doctest::Approx(0.025).epsilon(1e-15));
    CHECK(fisher_nominal(0.031, 0.0) == doctest::Approx(0.031).epsilon(1e-15));
    CHECK_THROWS_AS(fisher_nominal(-1.0, 0.02), ValidationError);
}

TEST_CASE("deflation and reflation are exact inverses") {
    std::mt19937 rng(112233);
    std::uniform_real_distribution<double> rate_dist(-0.5, 0.5);
    for (int trial = 0; trial < 200; ++trial) {
        const double nominal = rate_dist(rng);
        const double inflation = rate_dist(rng);
        const double real = fisher_real(nominal, inflation);
        CHECK(fisher_nominal(real, inflation) == doctest::Approx(nominal).epsilon(1e-12));
    }
}

TEST_CASE("geometric mean inflation") {
    CHECK(geometric_mean_inflation(InflationForecast{{0.03}}) ==
          doctest::Approx(0.03).epsilon(1e-15));
    CHECK(geometric_mean_inflation(InflationForecast{{0.02, 0.02, 0.02}}) ==
          doctest::Approx(0.02).epsilon(1e-12));

    const double two_year = geometric_mean_inflation(InflationForecast{{0.02, 0.04}});
    CHECK(two_year == doctest::Approx(std::sqrt(1.02 * 1.04) - 1.0).epsilon(1e-12));

    CHECK_THROWS_AS(geometric_mean_inflation(InflationForecast{}), ValidationError);
    CHECK_THROWS_AS(geometric_mean_inflation(InflationForecast{{0.02, -1.0}}),
                    ValidationError);
}

TEST_CASE("full synthetic risk-free chain over the euro panel") {
    const InflationForecast foreign{{0.015}};
    const InflationForecast domestic{{0.0332}};
    const RiskFreeReport report = risk_free_pipeline(euro_panel(), foreign, domestic);

    CHECK(report.weighted_ytm == doctest::Approx(0.03653666).epsilon(1e-6));
    CHECK(report.foreign_inflation == doctest::Approx(0.015).epsilon(1e-15));
    CHECK(report.real_rate == doctest::Approx(0.02121838).epsilon(1e-6));
    CHECK(report.domestic_inflation == doctest::Approx(0.0332).epsilon(1e-15));
    CHECK(report.domestic_nominal == doctest::Approx(0.05512284).epsilon(1e-6));

    CHECK(std::abs(report.weighted_ytm * 100.0 - 3.65) <= 0.03);
    CHECK(std::abs(report.real_rate * 100.0 - 2.12) <= 0.02);
    CHECK(std::abs(report.domestic_nominal * 100.0 - 5.50) <= 0.05);

    // The stored link rates must satisfy the multiplicative identity exactly.
    CHECK((1.0 + report.deflation.real) * (1.0 + report.deflation.inflation) ==
          doctest::Approx(1.0 + report.deflation.nominal).epsilon(1e-12));
    CHECK((1.0 + report.reflation.real) * (1.0 + report.reflation.inflation) ==
          doctest::Approx(1.0 + report.reflation.nominal).epsilon(1e-12));
    CHECK(report.deflation.nominal == report.weighted_ytm);
    CHECK(report.deflation.real == report.real_rate);
    CHECK(report.reflation.real == report.real_rate);
    CHECK(report.reflation.nominal == report.domestic_nominal);
}

TEST_CASE("pipeline passthrough when both inflations are zero") {
    const std::vector<CountryDatum> one = {{"Solo", 0.04, 10.0}};
    const RiskFreeReport report =
        risk_free_pipeline(one, InflationForecast{{0.0}}, InflationForecast{{0.0}});
    CHECK(report.real_rate == doctest::Approx(0.04).epsilon(1e-15));
    CHECK(report.domestic_nominal == doctest::Approx(0.04).epsilon(1e-15));
}

TEST_CASE("higher domestic inflation raises the synthetic nominal rate") {
    double last = -1.0;
    for (double infl : {0.01, 0.02, 0.03, 0.05}) {
        const RiskFreeReport report = risk_free_pipeline(
            euro_panel(), InflationForecast{{0.015}}, InflationForecast{{infl}});
        CHECK(report.domestic_nominal > last);
        last = report.domestic_nominal;
    }
}

TEST_CASE("multiplicative chain differs from the additive shortcut by the cross term") {
    const RiskFreeReport report = risk_free_pipeline(
        euro_panel(), InflationForecast{{0.015}}, InflationForecast{{0.0332}});
    const double additive = report.weighted_ytm - report.foreign_inflation +
                            report.domestic_inflation;
    const double cross = (report.weighted_ytm - report.foreign_inflation) *
                         (report.domestic_inflation - report.foreign_inflation) /
                         (1.0 + report.foreign_inflation);
    CHECK(report.domestic_nominal - additive == doctest::Approx(cross).epsilon(1e-9));
    CHECK(report.domestic_nominal != additive);
}

TEST_CASE("country CSV parsing") {
    std::istringstream good(
        "country,ytm_pct,gdp\n"
        "Austria,3.70,381.1\n"
        "Germany,3.33,3107.0\n");
    const std::vector<CountryDatum> rows = parse_country_csv(good);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].country == "Austria");
    CHECK(rows[0].ytm_10y == doctest::Approx(0.0370).epsilon(1e-12));
    CHECK(rows[0].gdp == 381.1);
    CHECK(rows[1].country == "Germany");
    CHECK(rows[1].ytm_10y == doctest::Approx(0.0333).epsilon(1e-12));
}

TEST_CASE("country CSV accepts reordered and extra columns") {
    std::istringstream shuffled(
        "gdp,country,note,ytm_pct\n"
        "100.5,Testland,ignored,4.00\n");
    const std::vector<CountryDatum> rows = parse_country_csv(shuffled);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].country == "Testland");
    CHECK(rows[0].ytm_10y == doctest::Approx(0.04).epsilon(1e-12));
    CHECK(rows[0].gdp == 100.5);
}

TEST_CASE("country CSV error reporting") {
    std::istringstream missing("country,gdp\nAustria,381.1\n");
    CHECK_THROWS_WITH_AS(parse_country_csv(missing),
                         "missing column 'ytm_pct' in CSV header", ValidationError);

    std::istringstream short_row(
        "country,ytm_pct,gdp\n"
        "Austria,3.70,381.1\n"
        "Belgium,3.72\n");
    try {
        parse_country_csv(short_row);
        FAIL("expected a parse error for the short row");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    std::istringstream bad_number(
        "country,ytm_pct,gdp\n"
        "Austria,not-a-rate,381.1\n");
    try {
        parse_country_csv(bad_number);
        FAIL("expected a parse error for the bad number");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::istringstream zero_gdp(
        "country,ytm_pct,gdp\n"
        "Austria,3.70,0\n");
    try {
        parse_country_csv(zero_gdp);
        FAIL("expected a parse error for the non-positive GDP");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::istringstream empty("country,ytm_pct,gdp\n");
    CHECK_THROWS_AS(parse_country_csv(empty), ValidationError);
}
