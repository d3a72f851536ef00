#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "fks/errors.hpp"

namespace fks {

// %.17g round-trips every double, so fixed seeds give byte-identical tables
inline std::string csv_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_cell(long long v) { return std::to_string(v); }
inline std::string csv_cell(int v) { return std::to_string(v); }

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& header) : out_(path) {
        if (!out_)
            throw ConfigError("cannot open output file: " + path);
        out_ << header << '\n';
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

} // namespace fks
