#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bondrisk {

enum class ReportFormat { table, csv, json };

// Accepts "table", "csv" or "json"; throws ValidationError otherwise.
ReportFormat parse_format(std::string_view name);

// Fixed-point rendering with the given decimals. Negative zero and values that
// round to it come out unsigned, so equal numbers always print identically.
std::string format_number(double value, int decimals);

struct Column {
    std::string name;
    int decimals = 4;        // used by csv and json
    int table_decimals = -1; // table override, -1 means same as decimals
    bool text = false;
};

using Cell = std::variant<double, std::string>;

struct SummaryItem {
    std::string name;
    double value = 0.0;
    int decimals = 4;
};

// Format-independent description of one command's output. The table renderer
// targets people, csv is data rows only, json carries the whole envelope. All
// three print numbers through format_number, so a value shown by two formats
// is byte-identical between them.
struct ReportEnvelope {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // echo of parameters
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<SummaryItem> summary;
    std::vector<std::string> notes;
};

void render(const ReportEnvelope& envelope, ReportFormat format, std::ostream& out);

}  // namespace bondrisk
