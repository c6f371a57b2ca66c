#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace spintrace {

// Column-oriented numeric series (time grids, parameter sweeps) with a
// metadata preamble. CSV output is deterministic: full 17-significant-digit
// floats, no timestamps, '#'-prefixed metadata lines.
struct TimeSeries {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_meta(const std::string& key, const std::string& value) { meta.emplace_back(key, value); }

    static std::string format_double(double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }

    void write_csv(std::ostream& os) const {
        for (const auto& [key, value] : meta) os << "# " << key << " = " << value << "\n";
        for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_double(row[c]);
            os << "\n";
        }
    }

    void write_json(std::ostream& os) const {
        os << "{\n  \"meta\": {";
        for (std::size_t i = 0; i < meta.size(); ++i)
            os << (i ? ", " : "") << "\"" << meta[i].first << "\": \"" << meta[i].second << "\"";
        os << "},\n  \"columns\": [";
        for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? ", " : "") << "\"" << columns[c] << "\"";
        os << "],\n  \"rows\": [\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            os << "    [";
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                os << (c ? ", " : "") << format_double(rows[r][c]);
            os << "]" << (r + 1 < rows.size() ? "," : "") << "\n";
        }
        os << "  ]\n}\n";
    }
};

}  // namespace spintrace
