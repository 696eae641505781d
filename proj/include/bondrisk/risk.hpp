#pragma once

#include <span>
#include <vector>

#include "bondrisk/bond.hpp"
#include "bondrisk/pricing.hpp"

namespace bondrisk {

// Interest-rate risk profile of a bond at one anchor yield.
struct RiskMetrics {
    double yield = 0.0;      // decimal
    double price_pct = 0.0;  // fraction of outstanding principal
    double macaulay = 0.0;   // years
    double modified = 0.0;   // macaulay / (1 + yield)
    double convexity = 0.0;
};

// Price response to a single yield move of delta_y (decimal).
struct RateShift {
    double delta_y = 0.0;
    double rel_change = 0.0;      // fractional price change
    double abs_change_pct = 0.0;  // change in percent-of-par points
    double new_price_pct = 0.0;   // price_pct + abs_change_pct / 100
};

// One grid point of a sensitivity sweep. Prices and deltas are in
// percent-of-par points; err_dur and err_conv are fractional deviations of the
// approximations from the exact price, signed as approximation minus exact.
struct SensitivityRow {
    double yield = 0.0;  // decimal
    double price_exact = 0.0;
    double price_dur = 0.0;
    double price_conv = 0.0;
    double delta_exact = 0.0;
    double delta_dur = 0.0;
    double delta_conv = 0.0;
    double err_dur = 0.0;
    double err_conv = 0.0;
};

// Cash-flow-weighted mean time to payment, in years.
// Throws ValidationError when the priced schedule has a non-positive price.
double macaulay_duration(const PricedSchedule& priced);

double modified_duration(double macaulay, double yield);

// Second-order price sensitivity: sum of (t^2 + t) weighted present values
// over price * (1 + yield)^2. Exact for this discounting model, so
// d2P/dy2 = convexity * price.
double convexity(const PricedSchedule& priced);

// First-order estimate: rel_change = -modified * delta_y.
RateShift estimate_shift_duration(const RiskMetrics& metrics, double delta_y);

// Second-order estimate: rel_change = -modified * delta_y + convexity * delta_y^2 / 2.
RateShift estimate_shift_convexity(const RiskMetrics& metrics, double delta_y);

// Full repricing at yield + delta_y, reported in the same shift terms.
RateShift exact_shift(const CashFlowSchedule& schedule, double yield, double delta_y);

// Generates, prices and measures a bond in one call.
RiskMetrics analyze_bond(const AmortizingBondSpec& spec, double yield);

// Prices the bond across yield_grid and compares exact repricing against the
// duration-only and duration-plus-convexity estimates anchored at
// anchor_yield. Rows come back in grid order; a grid point equal to the
// anchor produces an identically zero row. The parallel variant distributes
// grid points across OpenMP threads and returns bit-identical rows to the
// serial one.
std::vector<SensitivityRow> sensitivity_sweep(const AmortizingBondSpec& spec, double anchor_yield,
                                              std::span<const double> yield_grid);
std::vector<SensitivityRow> sensitivity_sweep_serial(const AmortizingBondSpec& spec,
                                                     double anchor_yield,
                                                     std::span<const double> yield_grid);

}  // namespace bondrisk
