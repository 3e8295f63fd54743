#pragma once

#include <array>
#include <span>
#include <vector>

#include "windrisk/series.hpp"
#include "windrisk/stats.hpp"

namespace windrisk {

/// A what-if case: fraction p of total demand assigned to wind, reserve
/// capacity R available to absorb hourly shortfalls, the hour-of-day demand
/// shape, and the wind generation basis (GWh, calibrated to mean demand).
struct Scenario {
  double penetration = 0.0;    // p in (0, 1]
  double reserve_gwh = 0.0;    // R >= 0
  DemandProfile demand;
  HourlySeries wind_basis;     // GWh

  void validate() const;
};

/// Per-hour energy balance. Exactly one of deficit/surplus is nonzero at any
/// hour, and deficit - surplus == target - generation.
struct BalanceSeries {
  HourStamp start;
  std::vector<double> generation;  // g(h) = p * B(h)
  std::vector<double> target;      // t(h) = p * D(hour of day)
  std::vector<double> deficit;     // max(0, t - g)
  std::vector<double> surplus;     // max(0, g - t)

  std::size_t size() const { return generation.size(); }
  HourStamp stamp_at(std::size_t i) const { return start + static_cast<std::int64_t>(i); }
  int hour_of_day_at(std::size_t i) const { return stamp_at(i).hour_of_day(); }
};

Scenario build_scenario(const HourlySeries& wind_energy, const DemandProfile& demand,
                        double penetration, double reserve_gwh);

/// Scales basis and demand by the penetration and differences them hour by
/// hour. The demand shape is tiled across days by hour of day; day_factors,
/// when given (one per complete day starting at the first sample), apply a
/// per-day multiplicative level shift to the target.
BalanceSeries hourly_balance(const Scenario& scenario,
                             std::span<const double> day_factors = {});

/// A value every hour-of-day slot across >= 2 days, summarized per slot.
std::array<BoxplotSummary, 24> hour_of_day_boxplots(
    std::span<const std::array<double, 24>> days);

/// Slot summaries of a DailyProfileSet (e.g. generation profiles).
std::array<BoxplotSummary, 24> hour_of_day_boxplots(const DailyProfileSet& days);

/// Which balance field to fan out by hour of day.
enum class BalanceField { Generation, Target, Deficit, Surplus };

/// Slot summaries of one balance field; the series must start at midnight
/// and is cut into complete days first.
std::array<BoxplotSummary, 24> hour_of_day_boxplots(const BalanceSeries& balance,
                                                    BalanceField field);

struct Exceedance {
  std::size_t hour = 0;  // index into the balance series
  double excess_gwh = 0.0;
};

/// Hours whose deficit exceeds the reserve, with the overshoot d(h) - R.
std::vector<Exceedance> reserve_exceedance(const BalanceSeries& balance, double reserve_gwh);

double max_deficit(const BalanceSeries& balance);

/// Penetration at which the maximum hourly deficit first equals the reserve:
/// p* = reference_p * R / maxdef(reference_p). Rests on scaling linearity,
/// d_p(h) = (p/q) d_q(h). The maximum includes boxplot outliers.
double critical_threshold(const HourlySeries& wind_basis, const DemandProfile& demand,
                          double reserve_gwh, double reference_p);

}  // namespace windrisk
