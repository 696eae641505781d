#pragma once

#include <span>
#include <string>
#include <vector>

namespace bondrisk {

// One reference market used when composing a synthetic risk-free rate.
struct CountryDatum {
    std::string country;
    double ytm_10y = 0.0;  // 10-year government bond yield, decimal
    double gdp = 0.0;      // weight basis; any consistent unit
};

// A nominal/real/inflation triple tied together by (1+nominal) = (1+real)(1+inflation).
struct FisherRates {
    double nominal = 0.0;
    double real = 0.0;
    double inflation = 0.0;
};

struct InflationForecast {
    std::vector<double> annual_rates;  // decimals, one per forecast year
};

// GDP-weighted mean of the country yields.
// Throws ValidationError for an empty span, a non-positive gdp or a yield <= -1.
double weighted_average_ytm(std::span<const CountryDatum> data);

// Solve the Fisher relation for the real rate: (1+nominal)/(1+inflation) - 1.
double fisher_real(double nominal, double inflation);

// Compose a nominal rate: (1+real)(1+inflation) - 1. Multiplicative on purpose;
// the additive shortcut real + inflation drifts at higher rates.
double fisher_nominal(double real, double inflation);

// Compounded average: (prod(1+r_k))^(1/n) - 1.
double geometric_mean_inflation(const InflationForecast& forecast);

// Synthetic risk-free rate for a market without a liquid sovereign curve:
// take a GDP-weighted foreign nominal yield, strip foreign inflation to get a
// real rate, then re-inflate with the domestic forecast.
struct RiskFreeReport {
    double weighted_ytm = 0.0;
    double foreign_inflation = 0.0;
    double real_rate = 0.0;
    double domestic_inflation = 0.0;
    double domestic_nominal = 0.0;
    FisherRates deflation;  // weighted_ytm decomposed against foreign inflation
    FisherRates reflation;  // domestic_nominal composed from the real rate
};

RiskFreeReport risk_free_pipeline(std::span<const CountryDatum> data,
                                  const InflationForecast& foreign,
                                  const InflationForecast& domestic);

}  // namespace bondrisk
