#include "bondrisk/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "bondrisk/errors.hpp"

namespace bondrisk {

namespace {

std::string render_cell(const Cell& cell, int decimals) {
    if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
    return format_number(std::get<double>(cell), decimals);
}

int table_decimals(const Column& column) {
    return column.table_decimals >= 0 ? column.table_decimals : column.decimals;
}

void render_table(const ReportEnvelope& envelope, std::ostream& out) {
    out << "command: " << envelope.command << "\n";
    out << "format: table\n";
    for (const auto& [key, value] : envelope.inputs) out << key << ": " << value << "\n";
    out << "\n";

    std::vector<std::size_t> widths(envelope.columns.size());
    std::vector<std::vector<std::string>> cells(envelope.rows.size());
    for (std::size_t c = 0; c < envelope.columns.size(); ++c)
        widths[c] = envelope.columns[c].name.size();
    for (std::size_t r = 0; r < envelope.rows.size(); ++r) {
        cells[r].resize(envelope.columns.size());
        for (std::size_t c = 0; c < envelope.columns.size(); ++c) {
            cells[r][c] = render_cell(envelope.rows[r][c], table_decimals(envelope.columns[c]));
            widths[c] = std::max(widths[c], cells[r][c].size());
        }
    }

    const auto emit_row = [&](const std::vector<std::string>& row,
                              const std::vector<Column>& columns) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string field = row[c];
            if (columns[c].text)
                field.append(widths[c] - field.size(), ' ');
            else
                field.insert(0, widths[c] - field.size(), ' ');
            if (c > 0) line += "  ";
            line += field;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    };

    std::vector<std::string> header;
    header.reserve(envelope.columns.size());
    for (const Column& column : envelope.columns) header.push_back(column.name);
    emit_row(header, envelope.columns);
    for (const auto& row : cells) emit_row(row, envelope.columns);

    if (!envelope.summary.empty()) {
        out << "\n";
        for (const SummaryItem& item : envelope.summary)
            out << item.name << ": " << format_number(item.value, item.decimals) << "\n";
    }
    for (const std::string& note : envelope.notes) out << "note: " << note << "\n";
}

void render_csv(const ReportEnvelope& envelope, std::ostream& out) {
    for (std::size_t c = 0; c < envelope.columns.size(); ++c) {
        if (c > 0) out << ",";
        out << envelope.columns[c].name;
    }
    out << "\n";
    for (const auto& row : envelope.rows) {
        for (std::size_t c = 0; c < envelope.columns.size(); ++c) {
            if (c > 0) out << ",";
            out << render_cell(row[c], envelope.columns[c].decimals);
        }
        out << "\n";
    }
    // Summary values ride along as comment lines so the data block stays plain.
    for (const SummaryItem& item : envelope.summary)
        out << "# " << item.name << " = " << format_number(item.value, item.decimals) << "\n";
}

void render_json(const ReportEnvelope& envelope, std::ostream& out) {
    using nlohmann::ordered_json;

    // Numbers pass through the same fixed-point text as the other formats and
    // get parsed back, so every format shows identical digits.
    const auto number = [](double value, int decimals) -> ordered_json {
        if (!std::isfinite(value)) return format_number(value, decimals);
        return ordered_json::parse(format_number(value, decimals));
    };

    ordered_json doc;
    doc["command"] = envelope.command;
    doc["format"] = "json";
    doc["inputs"] = ordered_json::object();
    for (const auto& [key, value] : envelope.inputs) doc["inputs"][key] = value;
    doc["columns"] = ordered_json::array();
    for (const Column& column : envelope.columns) doc["columns"].push_back(column.name);
    doc["rows"] = ordered_json::array();
    for (const auto& row : envelope.rows) {
        ordered_json row_obj = ordered_json::object();
        for (std::size_t c = 0; c < envelope.columns.size(); ++c) {
            const Column& column = envelope.columns[c];
            if (std::holds_alternative<std::string>(row[c]))
                row_obj[column.name] = std::get<std::string>(row[c]);
            else
                row_obj[column.name] = number(std::get<double>(row[c]), column.decimals);
        }
        doc["rows"].push_back(std::move(row_obj));
    }
    doc["summary"] = ordered_json::object();
    for (const SummaryItem& item : envelope.summary)
        doc["summary"][item.name] = number(item.value, item.decimals);
    doc["notes"] = envelope.notes;
    out << doc.dump(2) << "\n";
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
    if (name == "table") return ReportFormat::table;
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw ValidationError("unknown format '" + std::string(name) + "', expected table, csv or json");
}

std::string format_number(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    std::string out(buf);
    // "-0.000" carries no information; print the unsigned zero instead.
    if (out[0] == '-' && out.find_first_not_of("0.", 1) == std::string::npos) out.erase(0, 1);
    return out;
}

void render(const ReportEnvelope& envelope, ReportFormat format, std::ostream& out) {
    switch (format) {
        case ReportFormat::table: render_table(envelope, out); break;
        case ReportFormat::csv: render_csv(envelope, out); break;
        case ReportFormat::json: render_json(envelope, out); break;
    }
}

}  // namespace bondrisk
