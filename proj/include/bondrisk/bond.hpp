#pragma once

#include <string>
#include <vector>

namespace bondrisk {

// Contract terms of an annually amortizing bond: equal principal installments
// plus coupon interest on the outstanding balance, first payment one year out.
struct AmortizingBondSpec {
    std::string label;
    double outstanding_principal = 0.0;  // currency units
    double coupon_rate = 0.0;            // annual rate, decimal (0.02 for 2%)
    int periods_remaining = 0;           // annual payments left
};

// Throws ValidationError unless principal > 0, coupon_rate >= 0 and
// periods_remaining >= 1.
void validate(const AmortizingBondSpec& spec);

struct CashFlowItem {
    int period = 0;  // years from valuation, 1-based
    double principal = 0.0;
    double interest = 0.0;
    double total = 0.0;
    double balance_after = 0.0;  // outstanding principal once this payment clears
};

struct CashFlowSchedule {
    AmortizingBondSpec spec;
    std::vector<CashFlowItem> items;  // one per period, in period order
};

// Equal-principal amortization: each period repays principal/periods plus
// coupon interest accrued on the balance outstanding at the period's start.
// The per-period principal is not rounded to cents.
CashFlowSchedule generate_schedule(const AmortizingBondSpec& spec);

// Arithmetic sum of all payments, i.e. the price at zero yield.
double undiscounted_total(const CashFlowSchedule& schedule);

}  // namespace bondrisk
