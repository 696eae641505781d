#pragma once

#include <vector>

#include "bondrisk/bond.hpp"

namespace bondrisk {

// A schedule discounted at one flat annual yield.
struct PricedSchedule {
    CashFlowSchedule schedule;
    double yield = 0.0;            // annual rate, decimal
    std::vector<double> pv_items;  // present value of each payment, in period order
    double price_abs = 0.0;        // sum of pv_items, currency units
    double price_pct = 0.0;        // price_abs / outstanding principal, as a fraction
};

// Discounts every payment at (1 + yield)^period.
// Throws ValidationError for yield <= -1, where the discount factor is undefined.
PricedSchedule present_value(const CashFlowSchedule& schedule, double yield);

// Solves present_value(schedule, y).price_pct == market_price_pct for y.
// market_price_pct is a fraction of outstanding principal (0.91571 for a bond
// quoted at 91.571% of par). Safeguarded Newton iteration inside the bracket
// [-0.99, 10.0], converging when the residual in percent-of-par points drops
// below 1e-12, with a 200 iteration cap.
// Throws NoRootError when the price lies outside the range attainable on the
// bracket and SolverFailureError when the cap is reached without convergence.
double yield_to_maturity(const CashFlowSchedule& schedule, double market_price_pct);

}  // namespace bondrisk
