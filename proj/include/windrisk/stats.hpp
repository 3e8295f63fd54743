#pragma once

#include <span>
#include <string>
#include <vector>

namespace windrisk {

/// Five-number summary plus 1.5*IQR whiskers and outliers. Quartiles are
/// Tukey hinges (median of each half, median shared by both halves when the
/// count is odd); whiskers sit on the most extreme data points inside the
/// [q1 - 1.5*IQR, q3 + 1.5*IQR] fences; points beyond the fences are listed
/// as outliers. minimum/maximum are the raw extremes, outliers included.
struct BoxplotSummary {
  double minimum = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double maximum = 0.0;
  double lower_whisker = 0.0;
  double upper_whisker = 0.0;
  std::vector<double> outliers;

  double iqr() const { return q3 - q1; }
};

/// Name of the convention above, echoed in reports so downstream consumers
/// know which quartile rule produced the numbers.
inline const char* boxplot_convention() { return "tukey-hinges-1.5iqr-whiskers"; }

/// Summarizes a non-empty sample set. Input order does not matter.
BoxplotSummary boxplot_summary(std::span<const double> samples);

/// Quantile by linear interpolation between order statistics at rank
/// q*(n-1), over an unsorted sample. q in [0, 1].
double quantile_linear(std::span<const double> samples, double q);

}  // namespace windrisk
