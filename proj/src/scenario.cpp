#include "windrisk/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "windrisk/ingest.hpp"

namespace windrisk {

void Scenario::validate() const {
  if (!(penetration > 0.0) || !(penetration <= 1.0)) {
    throw InvalidParameterError("penetration must lie in (0, 1]");
  }
  if (!(reserve_gwh >= 0.0) || !std::isfinite(reserve_gwh)) {
    throw InvalidParameterError("reserve must be finite and >= 0");
  }
  demand.validate();
  wind_basis.validate();
  if (wind_basis.unit != Unit::GigawattHours) {
    throw InvalidParameterError("wind basis must be in GWh (convert speeds first)");
  }
}

Scenario build_scenario(const HourlySeries& wind_energy, const DemandProfile& demand,
                        double penetration, double reserve_gwh) {
  Scenario scenario;
  scenario.penetration = penetration;
  scenario.reserve_gwh = reserve_gwh;
  scenario.demand = demand;
  scenario.wind_basis = wind_energy;
  scenario.validate();
  return scenario;
}

BalanceSeries hourly_balance(const Scenario& scenario, std::span<const double> day_factors) {
  scenario.validate();
  const HourlySeries& basis = scenario.wind_basis;
  const double p = scenario.penetration;

  BalanceSeries balance;
  balance.start = basis.start;
  const std::size_t n = basis.size();
  balance.generation.reserve(n);
  balance.target.reserve(n);
  balance.deficit.reserve(n);
  balance.surplus.reserve(n);

  for (std::size_t h = 0; h < n; ++h) {
    double level = 1.0;
    if (!day_factors.empty()) {
      std::size_t day = h / 24;
      if (day < day_factors.size()) level = day_factors[day];
    }
    double g = p * basis.values[h];
    double t = p * level * scenario.demand.slots[basis.hour_of_day_at(h)];
    balance.generation.push_back(g);
    balance.target.push_back(t);
    balance.deficit.push_back(std::max(0.0, t - g));
    balance.surplus.push_back(std::max(0.0, g - t));
  }
  return balance;
}

std::array<BoxplotSummary, 24> hour_of_day_boxplots(
    std::span<const std::array<double, 24>> days) {
  if (days.size() < 2) {
    throw InsufficientDaysError("hour-of-day boxplots need at least 2 days, got " +
                                std::to_string(days.size()));
  }
  std::array<BoxplotSummary, 24> summaries;
  std::vector<double> slot;
  slot.reserve(days.size());
  for (int h = 0; h < 24; ++h) {
    slot.clear();
    for (const auto& day : days) slot.push_back(day[h]);
    summaries[h] = boxplot_summary(slot);
  }
  return summaries;
}

std::array<BoxplotSummary, 24> hour_of_day_boxplots(const DailyProfileSet& days) {
  std::vector<std::array<double, 24>> rows;
  rows.reserve(days.days.size());
  for (const auto& day : days.days) rows.push_back(day.samples);
  return hour_of_day_boxplots(rows);
}

std::array<BoxplotSummary, 24> hour_of_day_boxplots(const BalanceSeries& balance,
                                                    BalanceField field) {
  const std::vector<double>* values = nullptr;
  switch (field) {
    case BalanceField::Generation: values = &balance.generation; break;
    case BalanceField::Target: values = &balance.target; break;
    case BalanceField::Deficit: values = &balance.deficit; break;
    case BalanceField::Surplus: values = &balance.surplus; break;
  }
  HourlySeries carrier;
  carrier.start = balance.start;
  carrier.values = *values;
  carrier.unit = Unit::GigawattHours;
  DailyProfileSet days = split_days(carrier);
  return hour_of_day_boxplots(days);
}

std::vector<Exceedance> reserve_exceedance(const BalanceSeries& balance, double reserve_gwh) {
  if (!(reserve_gwh >= 0.0)) {
    throw InvalidParameterError("reserve must be >= 0");
  }
  std::vector<Exceedance> exceedances;
  for (std::size_t h = 0; h < balance.size(); ++h) {
    if (balance.deficit[h] > reserve_gwh) {
      exceedances.push_back({h, balance.deficit[h] - reserve_gwh});
    }
  }
  return exceedances;
}

double max_deficit(const BalanceSeries& balance) {
  double maxdef = 0.0;
  for (double d : balance.deficit) maxdef = std::max(maxdef, d);
  return maxdef;
}

double critical_threshold(const HourlySeries& wind_basis, const DemandProfile& demand,
                          double reserve_gwh, double reference_p) {
  Scenario reference = build_scenario(wind_basis, demand, reference_p, reserve_gwh);
  double maxdef = max_deficit(hourly_balance(reference));
  if (!(maxdef > 0.0)) {
    throw NoDeficitAtReferenceError("no deficit at reference penetration " +
                                    std::to_string(reference_p) +
                                    "; threshold is unbounded");
  }
  return reference_p * reserve_gwh / maxdef;
}

}  // namespace windrisk
