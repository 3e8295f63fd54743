#include "windrisk/acf.hpp"

#include <cmath>

namespace windrisk {

double autocorr(std::span<const double, 24> profile, std::size_t lag) {
  if (lag > 22) {
    throw InvalidParameterError("lag must be <= 22 for a 24-hour profile");
  }
  const std::size_t n = 24 - lag;
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    mean_x += profile[t];
    mean_y += profile[t + lag];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    double dx = profile[t] - mean_x;
    double dy = profile[t + lag] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw ZeroVarianceError("constant subsequence at lag " + std::to_string(lag) +
                            "; coefficient undefined");
  }
  if (lag == 0) return 1.0;
  double rho = sxy / std::sqrt(sxx * syy);
  // Clamp the last-ulp noise so coefficients stay inside [-1, 1].
  if (rho > 1.0) rho = 1.0;
  if (rho < -1.0) rho = -1.0;
  return rho;
}

std::vector<LagDistribution> hhacf_distribution(const DailyProfileSet& days,
                                                std::size_t max_lag) {
  if (days.days.size() < 2) {
    throw InsufficientDaysError("hhACF needs at least 2 complete days");
  }
  if (max_lag < 1 || max_lag > 22) {
    throw InvalidParameterError("max_lag must be in 1..22");
  }
  std::vector<LagDistribution> distributions;
  distributions.reserve(max_lag);
  for (std::size_t lag = 1; lag <= max_lag; ++lag) {
    LagDistribution dist;
    dist.lag = lag;
    for (const auto& day : days.days) {
      try {
        dist.coefficients.push_back(autocorr(day.samples, lag));
      } catch (const ZeroVarianceError&) {
        ++dist.skipped_days;
      }
    }
    if (dist.coefficients.empty()) {
      throw AllDaysDegenerateError("every day is constant at lag " + std::to_string(lag));
    }
    dist.summary = boxplot_summary(dist.coefficients);
    distributions.push_back(std::move(dist));
  }
  return distributions;
}

double lag_uncertainty(const LagDistribution& dist, double confidence,
                       bool include_outliers) {
  if (dist.coefficients.empty()) {
    throw EmptyDistributionError("lag distribution has no coefficients");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw InvalidParameterError("confidence must lie in (0, 1)");
  }
  double rho_low;
  if (include_outliers) {
    rho_low = dist.summary.minimum;
  } else {
    rho_low = quantile_linear(dist.coefficients, (1.0 - confidence) / 2.0);
  }
  return (1.0 - rho_low) * 100.0;
}

std::size_t plant_count(double deficit_gwh, double nameplate_gw, double fast_fraction) {
  if (!(nameplate_gw > 0.0)) {
    throw InvalidParameterError("nameplate must be positive");
  }
  if (!(fast_fraction > 0.0 && fast_fraction <= 1.0)) {
    throw InvalidParameterError("fast-response fraction must lie in (0, 1]");
  }
  if (!(deficit_gwh >= 0.0) || !std::isfinite(deficit_gwh)) {
    throw InvalidParameterError("deficit must be finite and >= 0");
  }
  // Each plant delivers nameplate * fast_fraction GWh over the one-hour window.
  double per_plant = nameplate_gw * fast_fraction;
  return static_cast<std::size_t>(std::ceil(deficit_gwh / per_plant));
}

FleetPlan size_compensation_fleet(const std::array<double, 3>& worst_deficits_gwh,
                                  double nameplate_gw, double fast_fraction) {
  FleetPlan plan;
  for (std::size_t i = 0; i < 3; ++i) {
    FleetClass& cls = plan.classes[i];
    cls.lag_hours = i + 1;
    cls.worst_deficit_gwh = worst_deficits_gwh[i];
    cls.nameplate_gw = nameplate_gw;
    cls.fast_fraction = fast_fraction;
    cls.plant_count = plant_count(worst_deficits_gwh[i], nameplate_gw, fast_fraction);
  }
  return plan;
}

double worst_window_deficit(std::span<const double> deficits, std::size_t window_hours) {
  if (window_hours < 1 || window_hours > deficits.size()) {
    throw InvalidParameterError("window must be in 1..series length");
  }
  double window_sum = 0.0;
  for (std::size_t i = 0; i < window_hours; ++i) window_sum += deficits[i];
  double worst = window_sum;
  for (std::size_t i = window_hours; i < deficits.size(); ++i) {
    window_sum += deficits[i] - deficits[i - window_hours];
    if (window_sum > worst) worst = window_sum;
  }
  return worst;
}

}  // namespace windrisk
