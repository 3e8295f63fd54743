#include "windrisk/power.hpp"

#include <cmath>

namespace windrisk {

void ConversionParams::validate() const {
  if (!(cut_in_ms > 0.0) || !(cut_out_ms > cut_in_ms) || !std::isfinite(cut_out_ms)) {
    throw InvalidParameterError("require 0 < cut_in < cut_out");
  }
  if (!(k_gwh_per_ms > 0.0) || !std::isfinite(k_gwh_per_ms)) {
    throw InvalidParameterError("scaling factor k must be positive and finite");
  }
}

HourlySeries speed_to_energy(const HourlySeries& speeds, const ConversionParams& params) {
  params.validate();
  speeds.validate();
  HourlySeries energy;
  energy.start = speeds.start;
  energy.unit = Unit::GigawattHours;
  energy.values.reserve(speeds.size());
  for (double s : speeds.values) {
    energy.values.push_back(in_band(s, params.cut_in_ms, params.cut_out_ms)
                                ? params.k_gwh_per_ms * s
                                : 0.0);
  }
  return energy;
}

double calibrate_scaling(const HourlySeries& speeds, const DemandProfile& demand,
                         double cut_in, double cut_out,
                         std::optional<CalibrationWindow> window) {
  speeds.validate();
  demand.validate();
  std::size_t begin = 0;
  std::size_t end = speeds.size();
  if (window) {
    if (window->end <= window->begin) {
      throw InvalidParameterError("calibration window is empty");
    }
    std::int64_t b = std::max<std::int64_t>(0, window->begin - speeds.start);
    std::int64_t e = std::min<std::int64_t>(static_cast<std::int64_t>(speeds.size()),
                                            window->end - speeds.start);
    if (b >= e) {
      throw InvalidParameterError("calibration window does not overlap the series");
    }
    begin = static_cast<std::size_t>(b);
    end = static_cast<std::size_t>(e);
  }

  double admissible_sum = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    double s = speeds.values[i];
    if (in_band(s, cut_in, cut_out)) admissible_sum += s;
  }
  if (admissible_sum <= 0.0) {
    throw NoAdmissibleWindError("every hour in the calibration window is outside [" +
                                std::to_string(cut_in) + ", " + std::to_string(cut_out) +
                                "] m/s");
  }
  double days = static_cast<double>(end - begin) / 24.0;
  return days * demand.daily_total() / admissible_sum;
}

NoWindStats no_wind_fraction(const HourlySeries& speeds, double cut_in, double cut_out) {
  speeds.validate();
  NoWindStats stats;
  for (double s : speeds.values) {
    if (!in_band(s, cut_in, cut_out)) ++stats.count;
  }
  stats.fraction = static_cast<double>(stats.count) / static_cast<double>(speeds.size());
  return stats;
}

HourlySeries aggregate_sites(std::span<const HourlySeries> sites,
                             std::span<const double> weights) {
  if (sites.empty()) {
    throw InvalidParameterError("no sites to aggregate");
  }
  if (sites.size() != weights.size()) {
    throw LengthMismatchError("got " + std::to_string(sites.size()) + " sites but " +
                              std::to_string(weights.size()) + " weights");
  }
  const HourlySeries& first = sites[0];
  for (const HourlySeries& site : sites) {
    if (site.size() != first.size() || site.start != first.start) {
      throw LengthMismatchError("site series differ in length or timestamps");
    }
  }
  bool any_positive = false;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidParameterError("weights must be non-negative and finite");
    }
    if (w > 0.0) any_positive = true;
  }
  if (!any_positive) {
    throw AllZeroWeightsError("all aggregation weights are zero");
  }

  HourlySeries out;
  out.start = first.start;
  out.unit = Unit::GigawattHours;
  out.values.assign(first.size(), 0.0);
  for (std::size_t s = 0; s < sites.size(); ++s) {
    for (std::size_t h = 0; h < out.values.size(); ++h) {
      out.values[h] += weights[s] * sites[s].values[h];
    }
  }
  return out;
}

}  // namespace windrisk
