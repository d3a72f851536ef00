#include "fks/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "fks/errors.hpp"

namespace fks {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginL = 70.0, kMarginR = 20.0, kMarginT = 40.0, kMarginB = 50.0;

const char* kColors[] = {"#1f5fa8", "#c24a2e", "#3a8c3f", "#7b4fa0", "#9a7b20", "#3b8f8f"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series, bool log_x, bool log_y) {
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot open output file: " + path);

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    auto usable = [&](double x, double y) {
        if (!std::isfinite(x) || !std::isfinite(y))
            return false;
        if (log_x && x <= 0.0)
            return false;
        if (log_y && y <= 0.0)
            return false;
        return true;
    };
    for (const SvgSeries& s : series)
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
            if (usable(s.x[i], s.y[i])) {
                const double px = log_x ? std::log10(s.x[i]) : s.x[i];
                const double py = log_y ? std::log10(s.y[i]) : s.y[i];
                x_lo = std::min(x_lo, px);
                x_hi = std::max(x_hi, px);
                y_lo = std::min(y_lo, py);
                y_hi = std::max(y_hi, py);
            }
    if (!(x_lo <= x_hi)) { // nothing plottable: emit an empty frame
        x_lo = 0.0;
        x_hi = 1.0;
        y_lo = 0.0;
        y_hi = 1.0;
    }
    if (x_hi == x_lo) {
        x_lo -= 0.5;
        x_hi += 0.5;
    }
    if (y_hi == y_lo) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }

    const double plot_w = kWidth - kMarginL - kMarginR;
    const double plot_h = kHeight - kMarginT - kMarginB;
    auto sx = [&](double v) {
        const double t = ((log_x ? std::log10(v) : v) - x_lo) / (x_hi - x_lo);
        return kMarginL + t * plot_w;
    };
    auto sy = [&](double v) {
        const double t = ((log_y ? std::log10(v) : v) - y_lo) / (y_hi - y_lo);
        return kHeight - kMarginB - t * plot_h;
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
        << "font-family=\"sans-serif\">" << title << "</text>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">"
        << x_label << (log_x ? " (log10)" : "") << "</text>\n";
    out << "<text x=\"18\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
        << "transform=\"rotate(-90 18 " << kHeight / 2 << ")\">" << y_label
        << (log_y ? " (log10)" : "") << "</text>\n";

    // corner tick labels
    out << "<text x=\"" << kMarginL << "\" y=\"" << kHeight - kMarginB + 18
        << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
        << fmt(x_lo) << "</text>\n";
    out << "<text x=\"" << kWidth - kMarginR << "\" y=\"" << kHeight - kMarginB + 18
        << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
        << fmt(x_hi) << "</text>\n";
    out << "<text x=\"" << kMarginL - 8 << "\" y=\"" << kHeight - kMarginB
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(y_lo)
        << "</text>\n";
    out << "<text x=\"" << kMarginL - 8 << "\" y=\"" << kMarginT + 12
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(y_hi)
        << "</text>\n";

    int color = 0;
    double legend_y = kMarginT + 16.0;
    for (const SvgSeries& s : series) {
        const char* stroke = kColors[color % 6];
        ++color;
        out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!usable(s.x[i], s.y[i]))
                continue;
            if (!first)
                out << ' ';
            out << fmt(sx(s.x[i])) << ',' << fmt(sy(s.y[i]));
            first = false;
        }
        out << "\"/>\n";
        if (!s.label.empty()) {
            out << "<text x=\"" << kMarginL + plot_w - 8 << "\" y=\"" << legend_y
                << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\" fill=\""
                << stroke << "\">" << s.label << "</text>\n";
            legend_y += 16.0;
        }
    }
    out << "</svg>\n";
    if (!out)
        throw ConfigError("plot write failed: " + path);
}

} // namespace fks
