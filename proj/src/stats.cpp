#include "windrisk/stats.hpp"

#include <algorithm>
#include <cmath>

#include "windrisk/errors.hpp"

namespace windrisk {

namespace {

// Median of sorted[lo..hi] inclusive.
double median_of(const std::vector<double>& sorted, std::size_t lo, std::size_t hi) {
  std::size_t n = hi - lo + 1;
  std::size_t mid = lo + n / 2;
  if (n % 2 == 1) return sorted[mid];
  return (sorted[mid - 1] + sorted[mid]) / 2.0;
}

}  // namespace

BoxplotSummary boxplot_summary(std::span<const double> samples) {
  if (samples.empty()) {
    throw InvalidParameterError("boxplot of an empty sample set");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  BoxplotSummary box;
  box.minimum = sorted.front();
  box.maximum = sorted.back();
  box.median = median_of(sorted, 0, n - 1);

  // Tukey hinges: the lower half runs to the middle element inclusive when n
  // is odd, exclusive when n is even; mirrored for the upper half.
  std::size_t half_hi = (n % 2 == 1) ? n / 2 : n / 2 - 1;
  box.q1 = median_of(sorted, 0, half_hi);
  box.q3 = median_of(sorted, n / 2, n - 1);

  double fence_lo = box.q1 - 1.5 * box.iqr();
  double fence_hi = box.q3 + 1.5 * box.iqr();
  box.lower_whisker = box.q1;
  box.upper_whisker = box.q3;
  for (double v : sorted) {
    if (v >= fence_lo) {
      box.lower_whisker = v;
      break;
    }
  }
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    if (*it <= fence_hi) {
      box.upper_whisker = *it;
      break;
    }
  }
  for (double v : sorted) {
    if (v < fence_lo || v > fence_hi) box.outliers.push_back(v);
  }
  return box;
}

double quantile_linear(std::span<const double> samples, double q) {
  if (samples.empty()) {
    throw InvalidParameterError("quantile of an empty sample set");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw InvalidParameterError("quantile level must be in [0, 1]");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() == 1) return sorted[0];
  double rank = q * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(std::floor(rank));
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = rank - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace windrisk
