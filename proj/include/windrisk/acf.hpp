#pragma once

#include <array>
#include <span>
#include <vector>

#include "windrisk/series.hpp"
#include "windrisk/stats.hpp"

namespace windrisk {

/// Pearson correlation of a 24-hour profile against itself shifted by `lag`
/// hours: x(0..23-lag) vs x(lag..23). lag 0 is exposed for testing and is
/// identically 1. Throws ZeroVarianceError when either overlapped
/// subsequence is constant.
double autocorr(std::span<const double, 24> profile, std::size_t lag);

/// Distribution of per-day autocorrelation coefficients at one lag. One
/// coefficient per day; days whose overlap is constant are skipped and
/// counted, not guessed at.
struct LagDistribution {
  std::size_t lag = 0;
  std::vector<double> coefficients;  // in day order, skipped days omitted
  std::size_t skipped_days = 0;      // ZeroVariance days at this lag
  BoxplotSummary summary;
};

/// Per-lag coefficient distributions for lag = 1..max_lag over a day set.
/// Each day's 24-hour profile contributes one coefficient per lag; the
/// source material's figure style needs one sample per day, and its 15
/// profiles are the only sample unit available.
std::vector<LagDistribution> hhacf_distribution(const DailyProfileSet& days,
                                                std::size_t max_lag);

/// Forecast uncertainty in percent from a coefficient distribution:
/// (1 - rho_low) * 100, where rho_low is the lower end of the two-sided
/// confidence interval over the sample (quantile (1-confidence)/2, linear
/// interpolation between order statistics) -- or the sample minimum when
/// include_outliers is set. The mapping from coefficients to a percentage is
/// pinned here, in one place, so it can be swapped if a better-grounded rule
/// emerges.
double lag_uncertainty(const LagDistribution& dist, double confidence = 0.95,
                       bool include_outliers = false);

/// Compensation-fleet sizing for the 1-hr, 2-hr and 3-hr lag classes.
struct FleetClass {
  std::size_t lag_hours = 0;
  double worst_deficit_gwh = 0.0;
  double nameplate_gw = 0.0;
  double fast_fraction = 0.0;
  std::size_t plant_count = 0;
};

struct FleetPlan {
  std::array<FleetClass, 3> classes;
};

/// Plants needed to cover a deficit within one hour when each plant can ramp
/// to fast_fraction of nameplate: ceil(deficit / (nameplate * fast_fraction)).
std::size_t plant_count(double deficit_gwh, double nameplate_gw, double fast_fraction);

/// Builds the three-class plan from per-class worst deficits.
FleetPlan size_compensation_fleet(const std::array<double, 3>& worst_deficits_gwh,
                                  double nameplate_gw, double fast_fraction);

/// Largest sum of `window_hours` consecutive deficits; the worst-case energy
/// a lag-n compensator class must be able to deliver.
double worst_window_deficit(std::span<const double> deficits, std::size_t window_hours);

}  // namespace windrisk
