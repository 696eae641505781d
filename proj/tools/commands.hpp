#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bondrisk/registry.hpp"
#include "bondrisk/report.hpp"

namespace bondrisk::cli {

// Envelope builders behind the subcommands. All rate and price arguments are
// percent figures as typed on the command line; conversion to decimals
// happens here and nowhere deeper.

ReportEnvelope cmd_schedule(const BondRegistry& registry, const std::string& registry_path,
                            const std::string& label, std::optional<double> yield_pct);

ReportEnvelope cmd_price(const BondRegistry& registry, const std::string& registry_path,
                         const std::string& label, double yield_pct);

ReportEnvelope cmd_ytm(const BondRegistry& registry, const std::string& registry_path,
                       const std::string& label, double price_pct);

ReportEnvelope cmd_risk(const BondRegistry& registry, const std::string& registry_path,
                        const std::string& label, bool all);

ReportEnvelope cmd_sweep(const BondRegistry& registry, const std::string& registry_path,
                         const std::string& label, double anchor_pct,
                         const std::string& grid_spec);

ReportEnvelope cmd_riskfree(const std::string& countries_path, const std::string& foreign_spec,
                            const std::string& domestic_spec);

// Grid spec is either lo:hi[:step] (inclusive range, default step 0.25, the
// anchor inserted when missing) or a comma list taken verbatim. Values in
// percent.
std::vector<double> parse_grid_pct(const std::string& spec, double anchor_pct);

// Comma list of percent rates, e.g. "1.5" or "2.1,1.9,1.8".
std::vector<double> parse_rate_list_pct(const std::string& spec);

}  // namespace bondrisk::cli
