#include "bondrisk/bond.hpp"

#include <numeric>

#include "bondrisk/errors.hpp"

namespace bondrisk {

void validate(const AmortizingBondSpec& spec) {
    if (!(spec.outstanding_principal > 0.0))
        throw ValidationError("bond '" + spec.label + "': outstanding_principal must be positive");
    if (spec.coupon_rate < 0.0)
        throw ValidationError("bond '" + spec.label + "': coupon_rate must not be negative");
    if (spec.periods_remaining < 1)
        throw ValidationError("bond '" + spec.label + "': periods_remaining must be at least 1");
}

CashFlowSchedule generate_schedule(const AmortizingBondSpec& spec) {
    validate(spec);
    const int n = spec.periods_remaining;
    const double installment = spec.outstanding_principal / n;

    CashFlowSchedule schedule{spec, {}};
    schedule.items.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        // Balances are multiples of the installment so the last one is exactly zero.
        const double balance_before = installment * (n - k + 1);
        CashFlowItem item;
        item.period = k;
        item.principal = installment;
        item.interest = spec.coupon_rate * balance_before;
        item.total = item.principal + item.interest;
        item.balance_after = installment * (n - k);
        schedule.items.push_back(item);
    }
    return schedule;
}

double undiscounted_total(const CashFlowSchedule& schedule) {
    return std::accumulate(schedule.items.begin(), schedule.items.end(), 0.0,
                           [](double acc, const CashFlowItem& item) { return acc + item.total; });
}

}  // namespace bondrisk
