#include "bondrisk/countries.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "bondrisk/errors.hpp"

namespace bondrisk {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

double parse_double(const std::string& text, int line_no, const std::string& column) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ValidationError("line " + std::to_string(line_no) + ": column '" + column +
                              "' has a non-numeric value '" + text + "'");
    return value;
}

}  // namespace

std::vector<CountryDatum> parse_country_csv(std::istream& in) {
    std::string line;
    int line_no = 0;

    // Header row decides the column layout.
    if (!std::getline(in, line)) throw ValidationError("empty CSV input");
    ++line_no;
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

    const std::vector<std::string> header = split_fields(line);
    std::size_t col_country = header.size();
    std::size_t col_ytm = header.size();
    std::size_t col_gdp = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "country") col_country = i;
        else if (header[i] == "ytm_pct") col_ytm = i;
        else if (header[i] == "gdp") col_gdp = i;
    }
    if (col_country == header.size())
        throw ValidationError("missing column 'country' in CSV header");
    if (col_ytm == header.size()) throw ValidationError("missing column 'ytm_pct' in CSV header");
    if (col_gdp == header.size()) throw ValidationError("missing column 'gdp' in CSV header");

    std::vector<CountryDatum> data;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;

        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != header.size())
            throw ValidationError("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(header.size()) + " fields, got " +
                                  std::to_string(fields.size()));

        CountryDatum datum;
        datum.country = fields[col_country];
        datum.ytm_10y = parse_double(fields[col_ytm], line_no, "ytm_pct") / 100.0;
        datum.gdp = parse_double(fields[col_gdp], line_no, "gdp");
        if (datum.country.empty())
            throw ValidationError("line " + std::to_string(line_no) + ": empty country name");
        if (!(datum.gdp > 0.0))
            throw ValidationError("line " + std::to_string(line_no) + ": gdp must be positive");
        data.push_back(std::move(datum));
    }
    if (data.empty()) throw ValidationError("CSV contains a header but no data rows");
    return data;
}

std::vector<CountryDatum> load_country_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open country CSV '" + path.string() + "'");
    try {
        return parse_country_csv(in);
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

}  // namespace bondrisk
