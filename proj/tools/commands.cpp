#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "bondrisk/countries.hpp"
#include "bondrisk/errors.hpp"
#include "bondrisk/pricing.hpp"
#include "bondrisk/risk.hpp"
#include "bondrisk/riskfree.hpp"

namespace bondrisk::cli {

namespace {

std::string echo_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

double parse_strict(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ValidationError(what + ": '" + text + "' is not a number");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

std::vector<double> parse_rate_list_pct(const std::string& spec) {
    if (spec.empty()) throw ValidationError("rate list must not be empty");
    std::vector<double> rates;
    for (const std::string& part : split(spec, ','))
        rates.push_back(parse_strict(part, "rate list entry"));
    return rates;
}

std::vector<double> parse_grid_pct(const std::string& spec, double anchor_pct) {
    if (spec.empty()) throw ValidationError("grid must not be empty");
    if (spec.find(':') == std::string::npos) return parse_rate_list_pct(spec);

    const std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 2 && parts.size() != 3)
        throw ValidationError("grid '" + spec + "' must look like lo:hi or lo:hi:step");
    const double lo = parse_strict(parts[0], "grid lower bound");
    const double hi = parse_strict(parts[1], "grid upper bound");
    const double step = parts.size() == 3 ? parse_strict(parts[2], "grid step") : 0.25;
    if (!(step > 0.0)) throw ValidationError("grid step must be positive");
    if (hi < lo) throw ValidationError("grid upper bound must not be below the lower bound");

    std::vector<double> grid;
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= count; ++i) grid.push_back(lo + step * static_cast<double>(i));

    const auto near = [](double a, double b) { return std::abs(a - b) < 1e-9; };
    if (std::none_of(grid.begin(), grid.end(),
                     [&](double g) { return near(g, anchor_pct); }))
        grid.push_back(anchor_pct);
    std::sort(grid.begin(), grid.end());
    return grid;
}

ReportEnvelope cmd_schedule(const BondRegistry& registry, const std::string& registry_path,
                            const std::string& label, std::optional<double> yield_pct) {
    const AmortizingBondSpec& spec = registry.find(label);
    const CashFlowSchedule schedule = generate_schedule(spec);

    ReportEnvelope envelope;
    envelope.command = "schedule";
    envelope.inputs = {{"registry", registry_path}, {"label", label}};
    if (yield_pct) envelope.inputs.emplace_back("yield", echo_number(*yield_pct));
    envelope.columns = {{"year", 0}, {"principal", 2}, {"interest", 2},
                        {"total", 2}, {"remaining_debt", 2}};
    for (const CashFlowItem& item : schedule.items)
        envelope.rows.push_back({static_cast<double>(item.period), item.principal, item.interest,
                                 item.total, item.balance_after});
    if (yield_pct) {
        const PricedSchedule priced = present_value(schedule, *yield_pct / 100.0);
        envelope.summary = {{"npv_abs", priced.price_abs, 2},
                            {"npv_pct", priced.price_pct * 100.0, 3}};
    }
    return envelope;
}

ReportEnvelope cmd_price(const BondRegistry& registry, const std::string& registry_path,
                         const std::string& label, double yield_pct) {
    const AmortizingBondSpec& spec = registry.find(label);
    const PricedSchedule priced = present_value(generate_schedule(spec), yield_pct / 100.0);

    ReportEnvelope envelope;
    envelope.command = "price";
    envelope.inputs = {{"registry", registry_path},
                       {"label", label},
                       {"yield", echo_number(yield_pct)}};
    envelope.columns = {{"label", 0, -1, true}, {"yield_pct", 4, 2},
                        {"price_pct", 3}, {"price_abs", 2}};
    envelope.rows.push_back({label, yield_pct, priced.price_pct * 100.0, priced.price_abs});
    return envelope;
}

ReportEnvelope cmd_ytm(const BondRegistry& registry, const std::string& registry_path,
                       const std::string& label, double price_pct) {
    const AmortizingBondSpec& spec = registry.find(label);
    const double y = yield_to_maturity(generate_schedule(spec), price_pct / 100.0);

    ReportEnvelope envelope;
    envelope.command = "ytm";
    envelope.inputs = {{"registry", registry_path},
                       {"label", label},
                       {"price", echo_number(price_pct)}};
    envelope.columns = {{"label", 0, -1, true}, {"price_pct", 3}, {"ytm_pct", 4, 2}};
    envelope.rows.push_back({label, price_pct, y * 100.0});
    return envelope;
}

ReportEnvelope cmd_risk(const BondRegistry& registry, const std::string& registry_path,
                        const std::string& label, bool all) {
    if (!all && label.empty()) throw ValidationError("provide a bond label or --all");
    if (all && !label.empty()) throw ValidationError("use either a bond label or --all, not both");

    std::vector<const AmortizingBondSpec*> selection;
    if (all)
        for (const AmortizingBondSpec& spec : registry.bonds) {
            if (registry.quoted_yield(spec.label)) selection.push_back(&spec);
        }
    else
        selection.push_back(&registry.find(label));
    if (selection.empty()) throw ValidationError("registry has no bonds with a quoted yield");

    ReportEnvelope envelope;
    envelope.command = "risk";
    envelope.inputs = {{"registry", registry_path},
                       {"selection", all ? std::string("all") : label}};
    envelope.columns = {{"label", 0, -1, true},
                        {"macaulay", 4, 2}, {"modified", 4, 2}, {"convexity", 4, 2}};
    for (const AmortizingBondSpec* spec : selection) {
        const auto quoted = registry.quoted_yield(spec->label);
        if (!quoted)
            throw ValidationError("bond '" + spec->label +
                                  "' has no quoted_ytm to anchor the risk report");
        const RiskMetrics metrics = analyze_bond(*spec, *quoted);
        envelope.rows.push_back({spec->label, metrics.macaulay, metrics.modified,
                                 metrics.convexity});
    }
    return envelope;
}

ReportEnvelope cmd_sweep(const BondRegistry& registry, const std::string& registry_path,
                         const std::string& label, double anchor_pct,
                         const std::string& grid_spec) {
    const AmortizingBondSpec& spec = registry.find(label);
    const std::vector<double> grid_pct = parse_grid_pct(grid_spec, anchor_pct);
    std::vector<double> grid;
    grid.reserve(grid_pct.size());
    for (double g : grid_pct) grid.push_back(g / 100.0);

    const std::vector<SensitivityRow> rows = sensitivity_sweep(spec, anchor_pct / 100.0, grid);

    ReportEnvelope envelope;
    envelope.command = "sweep";
    envelope.inputs = {{"registry", registry_path},
                       {"label", label},
                       {"anchor", echo_number(anchor_pct)},
                       {"grid", grid_spec}};
    envelope.columns = {{"yield", 4, 2},      {"price_exact", 3}, {"price_dur", 3},
                        {"price_conv", 3},    {"delta_exact", 3}, {"delta_dur", 3},
                        {"delta_conv", 3},    {"err_dur_pct", 4}, {"err_conv_pct", 4}};
    for (const SensitivityRow& row : rows)
        envelope.rows.push_back({row.yield * 100.0, row.price_exact, row.price_dur,
                                 row.price_conv, row.delta_exact, row.delta_dur, row.delta_conv,
                                 row.err_dur * 100.0, row.err_conv * 100.0});
    return envelope;
}

ReportEnvelope cmd_riskfree(const std::string& countries_path, const std::string& foreign_spec,
                            const std::string& domestic_spec) {
    const std::vector<CountryDatum> data = load_country_csv(countries_path);
    InflationForecast foreign;
    for (double r : parse_rate_list_pct(foreign_spec)) foreign.annual_rates.push_back(r / 100.0);
    InflationForecast domestic;
    for (double r : parse_rate_list_pct(domestic_spec)) domestic.annual_rates.push_back(r / 100.0);

    const RiskFreeReport report = risk_free_pipeline(data, foreign, domestic);

    ReportEnvelope envelope;
    envelope.command = "riskfree";
    envelope.inputs = {{"countries", countries_path},
                       {"foreign_inflation", foreign_spec},
                       {"domestic_inflation", domestic_spec}};
    envelope.columns = {{"weighted_ytm_pct", 4, 2},
                        {"foreign_inflation_pct", 4, 2},
                        {"real_rate_pct", 4, 2},
                        {"domestic_inflation_pct", 4, 2},
                        {"domestic_nominal_pct", 4, 2}};
    envelope.rows.push_back({report.weighted_ytm * 100.0, report.foreign_inflation * 100.0,
                             report.real_rate * 100.0, report.domestic_inflation * 100.0,
                             report.domestic_nominal * 100.0});
    envelope.notes = {"assumes purchasing power parity between the reference markets and the "
                      "domestic market holds constant over the horizon"};
    return envelope;
}

}  // namespace bondrisk::cli
