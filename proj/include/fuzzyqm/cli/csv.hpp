#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <system_error>
#include <vector>

#ifndef FUZZYQM_VERSION
#define FUZZYQM_VERSION "0.1.0"
#endif

namespace fuzzyqm::cli {

inline constexpr const char* kVersion = FUZZYQM_VERSION;

// Shortest representation that reads back to the same double.
inline std::string fmt(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

inline std::string fmt(std::size_t v) { return std::to_string(v); }

// One results table. Rendered as '#' comment lines, one header row, then
// comma-separated rows.
struct CsvTable {
    std::string file;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    [[nodiscard]] std::string render(const std::vector<std::string>& comments) const {
        std::string out;
        for (const auto& c : comments) out += "# " + c + "\n";
        for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
        out += "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + r[i];
            out += "\n";
        }
        return out;
    }
};

}  // namespace fuzzyqm::cli
