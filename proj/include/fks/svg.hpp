#pragma once

#include <string>
#include <vector>

namespace fks {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Static vector plot: one axes box, polyline per series, optional log scales.
// Output depends only on the inputs (no timestamps), so plots are diffable.
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series, bool log_x = false,
                    bool log_y = false);

} // namespace fks
