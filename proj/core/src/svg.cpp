#include "paramp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace paramp {

namespace {

constexpr double kWidth = 840.0, kHeight = 520.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 20.0, kBottom = 50.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::string render_svg_chart(const std::vector<SvgSeries>& series,
                             const std::string& x_label, const std::string& y_label) {
    if (series.empty()) throw std::invalid_argument("svg: no series");
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size() || s.x.empty()) throw std::invalid_argument("svg: bad series");
        for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        for (double v : s.y) {
            if (!std::isfinite(v)) continue;
            ymin = std::min(ymin, v); ymax = std::max(ymax, v);
        }
    }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double px = kWidth - kLeft - kRight;
    const double py = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * px; };
    auto sy = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * py; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth)
        << "\" height=\"" << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << " "
        << num(kHeight) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<g stroke=\"#333\" stroke-width=\"1\">\n";
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + py) << "\" x2=\""
        << num(kLeft + px) << "\" y2=\"" << num(kTop + py) << "\"/>\n";
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
        << "\" y2=\"" << num(kTop + py) << "\"/>\n";
    out << "</g>\n";

    // ticks: 5 per axis
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 4.0;
        const double fy = ymin + (ymax - ymin) * i / 4.0;
        out << "<text x=\"" << num(sx(fx)) << "\" y=\"" << num(kTop + py + 18)
            << "\" text-anchor=\"middle\">" << num(fx) << "</text>\n";
        out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(sy(fy) + 4)
            << "\" text-anchor=\"end\">" << num(fy) << "</text>\n";
    }
    out << "<text x=\"" << num(kLeft + px / 2) << "\" y=\"" << num(kHeight - 10)
        << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    out << "<text x=\"16\" y=\"" << num(kTop + py / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << num(kTop + py / 2)
        << ")\">" << y_label << "</text>\n";
    out << "</g>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[si % 8]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.y[i])) continue;
            out << num(sx(s.x[i])) << "," << num(sy(s.y[i])) << " ";
        }
        out << "\"/>\n";
    }
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t si = 0; si < series.size(); ++si) {
        const double ly = kTop + 16.0 * (si + 1);
        out << "<line x1=\"" << num(kLeft + px - 150) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
            << num(kLeft + px - 130) << "\" y2=\"" << num(ly - 4) << "\" stroke=\""
            << kPalette[si % 8] << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << num(kLeft + px - 124) << "\" y=\"" << num(ly) << "\">"
            << series[si].label << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace paramp
