#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bondrisk/errors.hpp"
#include "commands.hpp"

namespace {

// 0 success, 2 input or validation error, 3 solver did not converge.
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Amortizing bond analytics: schedules, pricing, yield solving, "
                 "rate risk and a synthetic risk-free rate"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "table";
    app.add_option("--format", format_name, "Output format: table, csv or json")
        ->capture_default_str();
    std::string registry_path = "data/bonds.json";
    app.add_option("--registry", registry_path, "Bond registry JSON file")
        ->capture_default_str();

    std::string schedule_label;
    double schedule_yield = 0.0;
    CLI::App* schedule = app.add_subcommand("schedule", "Amortization plan, optionally discounted");
    schedule->add_option("label", schedule_label, "Bond label")->required();
    CLI::Option* schedule_yield_opt =
        schedule->add_option("--yield", schedule_yield, "Discount yield in percent");

    std::string price_label;
    double price_yield = 0.0;
    CLI::App* price = app.add_subcommand("price", "Present value at a given yield");
    price->add_option("label", price_label, "Bond label")->required();
    price->add_option("--yield", price_yield, "Yield in percent")->required();

    std::string ytm_label;
    double ytm_price = 0.0;
    CLI::App* ytm = app.add_subcommand("ytm", "Yield to maturity for a market price");
    ytm->add_option("label", ytm_label, "Bond label")->required();
    ytm->add_option("--price", ytm_price, "Market price in percent of par")->required();

    std::string risk_label;
    bool risk_all = false;
    CLI::App* risk = app.add_subcommand("risk", "Duration and convexity at the quoted yield");
    risk->add_option("label", risk_label, "Bond label");
    risk->add_flag("--all", risk_all, "Analyze every bond carrying a quoted yield");

    std::string sweep_label;
    double sweep_anchor = 0.0;
    std::string sweep_grid;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Exact vs duration/convexity price estimates across a yield grid");
    sweep->add_option("label", sweep_label, "Bond label")->required();
    sweep->add_option("--anchor", sweep_anchor, "Anchor yield in percent")->required();
    sweep->add_option("--grid", sweep_grid, "Yield grid: lo:hi[:step] or a comma list, percent")
        ->required();

    std::string countries_path;
    std::string foreign_inflation;
    std::string domestic_inflation;
    CLI::App* riskfree = app.add_subcommand(
        "riskfree", "Synthetic risk-free rate from foreign yields and inflation");
    riskfree->add_option("--countries", countries_path, "Country CSV (country,ytm_pct,gdp)")
        ->required();
    riskfree
        ->add_option("--foreign-inflation", foreign_inflation,
                     "Foreign inflation forecast, percent (single value or comma list)")
        ->required();
    riskfree
        ->add_option("--domestic-inflation", domestic_inflation,
                     "Domestic inflation forecast, percent (single value or comma list)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        const bondrisk::ReportFormat format = bondrisk::parse_format(format_name);
        bondrisk::ReportEnvelope envelope;
        if (*schedule) {
            std::optional<double> yield_pct;
            if (schedule_yield_opt->count() > 0) yield_pct = schedule_yield;
            envelope = bondrisk::cli::cmd_schedule(bondrisk::load_bond_registry(registry_path),
                                                   registry_path, schedule_label, yield_pct);
        } else if (*price) {
            envelope = bondrisk::cli::cmd_price(bondrisk::load_bond_registry(registry_path),
                                                registry_path, price_label, price_yield);
        } else if (*ytm) {
            envelope = bondrisk::cli::cmd_ytm(bondrisk::load_bond_registry(registry_path),
                                              registry_path, ytm_label, ytm_price);
        } else if (*risk) {
            envelope = bondrisk::cli::cmd_risk(bondrisk::load_bond_registry(registry_path),
                                               registry_path, risk_label, risk_all);
        } else if (*sweep) {
            envelope = bondrisk::cli::cmd_sweep(bondrisk::load_bond_registry(registry_path),
                                                registry_path, sweep_label, sweep_anchor,
                                                sweep_grid);
        } else {
            envelope =
                bondrisk::cli::cmd_riskfree(countries_path, foreign_inflation, domestic_inflation);
        }
        bondrisk::render(envelope, format, std::cout);
        return 0;
    } catch (const bondrisk::SolverFailureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        // Covers validation errors, unattainable prices and anything a
        // malformed input file can throw.
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
