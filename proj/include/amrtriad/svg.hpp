// Minimal static SVG renderer for trajectory and histogram figures.
//
// The renderer emits standalone SVG 1.1 documents with no external
// dependencies: axes, ticks, a legend, and either polyline series or
// vertical bars. Curves with more than 2000 points are decimated by a
// uniform stride before drawing; emitted CSV files always keep the full
// resolution, the thinning is purely visual.
#pragma once

#include <string>
#include <vector>

#include "amrtriad/analysis.hpp"

namespace amrtriad {

/// One curve on a line chart. `x` and `y` must have equal length.
struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed = false;  ///< drawn dashed (used for deterministic overlays)
};

/// Declarative description of a line chart.
struct SvgChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
};

/// Renders a line chart; throws Error when no series or empty series are given.
std::string render_line_chart(const SvgChart& chart);

/// Renders a histogram as a bar chart over its bin edges.
std::string render_histogram_chart(const Histogram& hist, const std::string& title,
                                   const std::string& x_label);

}  // namespace amrtriad
