#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bondrisk/bond.hpp"

namespace bondrisk {

// Bond universe loaded from a JSON array. Each entry carries the contract
// terms plus an optional quoted_ytm (decimal) used as the default anchor for
// risk reports.
struct BondRegistry {
    std::vector<AmortizingBondSpec> bonds;  // file order
    std::unordered_map<std::string, std::size_t> index_by_label;
    std::unordered_map<std::string, double> quoted_ytm;

    const AmortizingBondSpec& find(const std::string& label) const;  // throws ValidationError
    std::optional<double> quoted_yield(const std::string& label) const;
};

BondRegistry parse_bond_registry(std::istream& in);
BondRegistry load_bond_registry(const std::filesystem::path& path);

}  // namespace bondrisk
