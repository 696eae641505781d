#include "bondrisk/riskfree.hpp"

#include <cmath>
#include <string>

#include "bondrisk/errors.hpp"

namespace bondrisk {

double weighted_average_ytm(std::span<const CountryDatum> data) {
    if (data.empty()) throw ValidationError("country list must not be empty");

    double total_gdp = 0.0;
    for (const CountryDatum& d : data) {
        if (!(d.gdp > 0.0))
            throw ValidationError("country '" + d.country + "': gdp must be positive");
        if (!(d.ytm_10y > -1.0))
            throw ValidationError("country '" + d.country + "': ytm must exceed -100%");
        total_gdp += d.gdp;
    }

    double average = 0.0;
    for (const CountryDatum& d : data) average += (d.gdp / total_gdp) * d.ytm_10y;
    return average;
}

double fisher_real(double nominal, double inflation) {
    if (!(nominal > -1.0)) throw ValidationError("nominal rate must exceed -100%");
    if (!(inflation > -1.0)) throw ValidationError("inflation rate must exceed -100%");
    return (1.0 + nominal) / (1.0 + inflation) - 1.0;
}

double fisher_nominal(double real, double inflation) {
    if (!(real > -1.0)) throw ValidationError("real rate must exceed -100%");
    if (!(inflation > -1.0)) throw ValidationError("inflation rate must exceed -100%");
    return (1.0 + real) * (1.0 + inflation) - 1.0;
}

double geometric_mean_inflation(const InflationForecast& forecast) {
    if (forecast.annual_rates.empty())
        throw ValidationError("inflation forecast must not be empty");

    double log_sum = 0.0;
    for (std::size_t i = 0; i < forecast.annual_rates.size(); ++i) {
        const double r = forecast.annual_rates[i];
        if (!(r > -1.0))
            throw ValidationError("inflation forecast entry " + std::to_string(i) +
                                  " must exceed -100%");
        log_sum += std::log1p(r);
    }
    return std::expm1(log_sum / static_cast<double>(forecast.annual_rates.size()));
}

RiskFreeReport risk_free_pipeline(std::span<const CountryDatum> data,
                                  const InflationForecast& foreign,
                                  const InflationForecast& domestic) {
    RiskFreeReport report;
    report.weighted_ytm = weighted_average_ytm(data);
    report.foreign_inflation = geometric_mean_inflation(foreign);
    report.real_rate = fisher_real(report.weighted_ytm, report.foreign_inflation);
    report.domestic_inflation = geometric_mean_inflation(domestic);
    report.domestic_nominal = fisher_nominal(report.real_rate, report.domestic_inflation);
    report.deflation = {report.weighted_ytm, report.real_rate, report.foreign_inflation};
    report.reflation = {report.domestic_nominal, report.real_rate, report.domestic_inflation};
    return report;
}

}  // namespace bondrisk
