#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "bondrisk/riskfree.hpp"

namespace bondrisk {

// Reads country yield data from CSV with a header naming the columns
// country, ytm_pct and gdp (any order, extra columns ignored). Yields are
// given in percent and converted to decimals. Throws ValidationError naming
// the offending column or 1-based line for malformed input.
std::vector<CountryDatum> parse_country_csv(std::istream& in);
std::vector<CountryDatum> load_country_csv(const std::filesystem::path& path);

}  // namespace bondrisk
