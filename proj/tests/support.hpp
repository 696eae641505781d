#pragma once

// Shared test plumbing: an extended-precision pricing oracle that rebuilds the
// amortization flows from first principles (independent of the library code
// under test), plus helpers for driving the CLI binary in subprocess tests.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace oracle {

inline long double pv_abs(double principal, double coupon_rate, int periods, long double y) {
    const long double installment = static_cast<long double>(principal) / periods;
    long double balance = principal;
    long double pv = 0.0L;
    for (int k = 1; k <= periods; ++k) {
        const long double flow = installment + static_cast<long double>(coupon_rate) * balance;
        pv += flow / std::pow(1.0L + y, static_cast<long double>(k));
        balance -= installment;
    }
    return pv;
}

inline long double dpdy(double principal, double coupon_rate, int periods, double y, double h) {
    const long double hl = h;
    return (pv_abs(principal, coupon_rate, periods, y + hl) -
            pv_abs(principal, coupon_rate, periods, y - hl)) /
           (2.0L * hl);
}

inline long double d2pdy2(double principal, double coupon_rate, int periods, double y, double h) {
    const long double hl = h;
    return (pv_abs(principal, coupon_rate, periods, y + hl) -
            2.0L * pv_abs(principal, coupon_rate, periods, y) +
            pv_abs(principal, coupon_rate, periods, y - hl)) /
           (hl * hl);
}

}  // namespace oracle

namespace cli_harness {

struct RunResult {
    int status = -1;
    std::string out;
};

// Path of the CLI binary and the bundled data directory, injected by ctest.
inline const char* cli_path() { return std::getenv("BONDRISK_CLI"); }

inline std::string data_dir() {
    const char* dir = std::getenv("BONDRISK_DATA");
    return dir ? dir : "data";
}

inline RunResult run(const std::string& args, const std::string& stderr_sink = "/dev/null") {
    RunResult result;
    const char* cli = cli_path();
    if (!cli) return result;
    const std::string command = std::string(cli) + " " + args + " 2>" + stderr_sink;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
    const int rc = pclose(pipe);
    if (WIFEXITED(rc)) result.status = WEXITSTATUS(rc);
    return result;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;          // data rows only
    std::map<std::string, std::string> summary;          // trailing "# key = value" lines

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        return header.size();
    }
    double value(std::size_t row, const std::string& name) const {
        return std::stod(rows[row][column(name)]);
    }
};

inline CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::size_t start = 0;
    bool saw_header = false;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(start, end - start);
        start = end + 1;
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::size_t eq = line.find('=');
            if (eq != std::string::npos) {
                std::string key = line.substr(1, eq - 1);
                std::string value = line.substr(eq + 1);
                while (!key.empty() && key.back() == ' ') key.pop_back();
                while (!key.empty() && key.front() == ' ') key.erase(0, 1);
                while (!value.empty() && value.front() == ' ') value.erase(0, 1);
                table.summary[key] = value;
            }
            continue;
        }
        std::vector<std::string> fields;
        std::size_t fstart = 0;
        while (true) {
            const std::size_t comma = line.find(',', fstart);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(fstart));
                break;
            }
            fields.push_back(line.substr(fstart, comma - fstart));
            fstart = comma + 1;
        }
        if (!saw_header) {
            table.header = fields;
            saw_header = true;
        } else {
            table.rows.push_back(fields);
        }
    }
    return table;
}

}  // namespace cli_harness
