#include "bondrisk/pricing.hpp"

#include <cmath>
#include <string>

#include "bondrisk/errors.hpp"

namespace bondrisk {

namespace {

struct PriceAndSlope {
    double price_pct;  // fraction of outstanding principal
    double slope;      // d(price_pct)/dy
};

// One discounting pass yielding the price and its yield derivative, used by
// the Newton step without materializing a PricedSchedule per iteration.
PriceAndSlope price_pct_with_slope(const CashFlowSchedule& schedule, double y) {
    const double base = 1.0 + y;
    double factor = 1.0;
    double sum = 0.0;
    double weighted = 0.0;
    for (const CashFlowItem& item : schedule.items) {
        factor *= base;
        const double pv = item.total / factor;
        sum += pv;
        weighted += item.period * pv;
    }
    const double principal = schedule.spec.outstanding_principal;
    return {sum / principal, -weighted / (base * principal)};
}

}  // namespace

PricedSchedule present_value(const CashFlowSchedule& schedule, double yield) {
    validate(schedule.spec);
    if (!(yield > -1.0))
        throw ValidationError("yield must exceed -100%");

    PricedSchedule priced;
    priced.schedule = schedule;
    priced.yield = yield;
    priced.pv_items.reserve(schedule.items.size());

    const double base = 1.0 + yield;
    double factor = 1.0;
    double sum = 0.0;
    for (const CashFlowItem& item : schedule.items) {
        factor *= base;
        const double pv = item.total / factor;
        priced.pv_items.push_back(pv);
        sum += pv;
    }
    priced.price_abs = sum;
    priced.price_pct = sum / schedule.spec.outstanding_principal;
    return priced;
}

double yield_to_maturity(const CashFlowSchedule& schedule, double market_price_pct) {
    validate(schedule.spec);
    if (!(market_price_pct > 0.0))
        throw NoRootError("market price must be positive, got " + std::to_string(market_price_pct));

    constexpr double kLoBracket = -0.99;
    constexpr double kHiBracket = 10.0;
    constexpr double kResidualTol = 1e-12;   // percent-of-par points
    constexpr double kFallbackTol = 1e-8;    // accepted when the bracket is exhausted
    constexpr int kMaxIterations = 200;

    const double target = market_price_pct * 100.0;
    const auto residual = [&](double y) {
        return price_pct_with_slope(schedule, y).price_pct * 100.0 - target;
    };

    // Price is strictly decreasing in yield, so the residual runs from
    // positive at the low end to negative at the high end when a root exists.
    double lo = kLoBracket;
    double hi = kHiBracket;
    if (residual(lo) < 0.0 || residual(hi) > 0.0)
        throw NoRootError("price " + std::to_string(target) +
                          "% of par is not attainable for yields in [-99%, 1000%]");

    double y = 0.05;  // ordinary market levels make a better start than mid-bracket
    if (y <= lo || y >= hi) y = 0.5 * (lo + hi);
    for (int it = 0; it < kMaxIterations; ++it) {
        const auto [price, slope] = price_pct_with_slope(schedule, y);
        const double f = price * 100.0 - target;
        if (std::abs(f) < kResidualTol) return y;
        if (f > 0.0)
            lo = y;
        else
            hi = y;
        if (hi - lo < 1e-15 * std::max(1.0, std::abs(y))) {
            // Bracket narrowed to machine precision; the residual floor is set
            // by rounding in the discounting sum, not by the iterate.
            if (std::abs(f) < kFallbackTol) return y;
            break;
        }
        double next = y;
        if (slope != 0.0) next = y - f / (slope * 100.0);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        y = next;
    }
    throw SolverFailureError("yield solver did not converge within " +
                             std::to_string(kMaxIterations) + " iterations");
}

}  // namespace bondrisk
