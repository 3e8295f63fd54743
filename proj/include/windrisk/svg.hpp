#pragma once

#include <span>
#include <string>
#include <vector>

#include "windrisk/clusters.hpp"
#include "windrisk/stats.hpp"

namespace windrisk {

/// Deterministic standalone SVG charts: same data in, same bytes out. No
/// timestamps, no randomized layout, fixed-precision number formatting.
/// That keeps every plot golden-file testable.

struct LineSeries {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
  bool markers = false;
};

std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, std::span<const LineSeries> series);

/// Hourly deficit (red, drawn downward) and surplus (green, upward) bars.
std::string balance_bars_svg(const std::string& title, std::span<const double> deficits,
                             std::span<const double> surpluses);

/// One box-and-whisker glyph per summary; tick labels run along the x axis.
/// An empty outlier list simply draws no outlier markers.
std::string boxplot_chart_svg(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              std::span<const BoxplotSummary> summaries,
                              std::span<const std::string> x_tick_labels);

/// Probability range per cluster length: the two estimator curves bracket
/// the band (high in red, low in blue).
std::string interval_chart_svg(const std::string& title, const std::string& x_label,
                               const std::string& y_label, const ClusterRiskProfile& profile);

/// Renders and writes through the shared file writer.
void emit_svg(const std::string& path, const std::string& svg);

}  // namespace windrisk
