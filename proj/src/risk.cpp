#include "bondrisk/risk.hpp"

#include <cstdint>
#include <string>

#include "bondrisk/errors.hpp"

namespace bondrisk {

namespace {

RiskMetrics metrics_from(const PricedSchedule& priced) {
    RiskMetrics metrics;
    metrics.yield = priced.yield;
    metrics.price_pct = priced.price_pct;
    metrics.macaulay = macaulay_duration(priced);
    metrics.modified = modified_duration(metrics.macaulay, priced.yield);
    metrics.convexity = convexity(priced);
    return metrics;
}

RateShift shift_from_relative(const RiskMetrics& metrics, double delta_y, double rel_change) {
    RateShift shift;
    shift.delta_y = delta_y;
    shift.rel_change = rel_change;
    shift.abs_change_pct = metrics.price_pct * 100.0 * rel_change;
    shift.new_price_pct = metrics.price_pct + shift.abs_change_pct / 100.0;
    return shift;
}

SensitivityRow sweep_row(const CashFlowSchedule& schedule, const RiskMetrics& anchor, double y) {
    const double anchor_price = anchor.price_pct * 100.0;
    const double price_exact =
        y == anchor.yield ? anchor_price : present_value(schedule, y).price_pct * 100.0;
    const double dy = y - anchor.yield;
    const double rel_dur = -anchor.modified * dy;
    const double rel_conv = rel_dur + 0.5 * anchor.convexity * dy * dy;

    SensitivityRow row;
    row.yield = y;
    row.price_exact = price_exact;
    row.price_dur = anchor_price * (1.0 + rel_dur);
    row.price_conv = anchor_price * (1.0 + rel_conv);
    row.delta_exact = price_exact - anchor_price;
    row.delta_dur = row.price_dur - anchor_price;
    row.delta_conv = row.price_conv - anchor_price;
    row.err_dur = (row.price_dur - price_exact) / price_exact;
    row.err_conv = (row.price_conv - price_exact) / price_exact;
    return row;
}

void validate_grid(std::span<const double> yield_grid) {
    if (yield_grid.empty()) throw ValidationError("yield grid must not be empty");
    for (std::size_t i = 0; i < yield_grid.size(); ++i)
        if (!(yield_grid[i] > -1.0))
            throw ValidationError("yield grid entry " + std::to_string(i) +
                                  " must exceed -100%");
}

}  // namespace

double macaulay_duration(const PricedSchedule& priced) {
    if (!(priced.price_abs > 0.0))
        throw ValidationError("duration is undefined for a non-positive price");
    double weighted = 0.0;
    for (std::size_t i = 0; i < priced.pv_items.size(); ++i)
        weighted += priced.schedule.items[i].period * priced.pv_items[i];
    return weighted / priced.price_abs;
}

double modified_duration(double macaulay, double yield) {
    if (!(yield > -1.0)) throw ValidationError("yield must exceed -100%");
    return macaulay / (1.0 + yield);
}

double convexity(const PricedSchedule& priced) {
    if (!(priced.price_abs > 0.0))
        throw ValidationError("convexity is undefined for a non-positive price");
    double weighted = 0.0;
    for (std::size_t i = 0; i < priced.pv_items.size(); ++i) {
        const double t = priced.schedule.items[i].period;
        weighted += (t * t + t) * priced.pv_items[i];
    }
    const double base = 1.0 + priced.yield;
    return weighted / (priced.price_abs * base * base);
}

RateShift estimate_shift_duration(const RiskMetrics& metrics, double delta_y) {
    return shift_from_relative(metrics, delta_y, -metrics.modified * delta_y);
}

RateShift estimate_shift_convexity(const RiskMetrics& metrics, double delta_y) {
    const double rel =
        -metrics.modified * delta_y + 0.5 * metrics.convexity * delta_y * delta_y;
    return shift_from_relative(metrics, delta_y, rel);
}

RateShift exact_shift(const CashFlowSchedule& schedule, double yield, double delta_y) {
    const PricedSchedule before = present_value(schedule, yield);
    const PricedSchedule after = present_value(schedule, yield + delta_y);

    RateShift shift;
    shift.delta_y = delta_y;
    shift.rel_change = (after.price_pct - before.price_pct) / before.price_pct;
    shift.abs_change_pct = (after.price_pct - before.price_pct) * 100.0;
    shift.new_price_pct = before.price_pct + shift.abs_change_pct / 100.0;
    return shift;
}

RiskMetrics analyze_bond(const AmortizingBondSpec& spec, double yield) {
    return metrics_from(present_value(generate_schedule(spec), yield));
}

std::vector<SensitivityRow> sensitivity_sweep(const AmortizingBondSpec& spec, double anchor_yield,
                                              std::span<const double> yield_grid) {
    validate_grid(yield_grid);
    const CashFlowSchedule schedule = generate_schedule(spec);
    const RiskMetrics anchor = metrics_from(present_value(schedule, anchor_yield));

    std::vector<SensitivityRow> rows(yield_grid.size());
    const std::int64_t n = static_cast<std::int64_t>(yield_grid.size());
#pragma omp parallel for schedule(static) if (n > 16)
    for (std::int64_t i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)] =
            sweep_row(schedule, anchor, yield_grid[static_cast<std::size_t>(i)]);
    return rows;
}

std::vector<SensitivityRow> sensitivity_sweep_serial(const AmortizingBondSpec& spec,
                                                     double anchor_yield,
                                                     std::span<const double> yield_grid) {
    validate_grid(yield_grid);
    const CashFlowSchedule schedule = generate_schedule(spec);
    const RiskMetrics anchor = metrics_from(present_value(schedule, anchor_yield));

    std::vector<SensitivityRow> rows(yield_grid.size());
    for (std::size_t i = 0; i < yield_grid.size(); ++i)
        rows[i] = sweep_row(schedule, anchor, yield_grid[i]);
    return rows;
}

}  // namespace bondrisk
