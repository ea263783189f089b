#pragma once

#include "paramp/report.hpp"

#include <string>
#include <vector>

namespace paramp {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Deterministic polyline chart (no timestamps, fixed formatting).
std::string render_svg_chart(const std::vector<SvgSeries>& series,
                             const std::string& x_label, const std::string& y_label);

} // namespace paramp
