#pragma once

#include <optional>
#include <span>
#include <vector>

#include "windrisk/series.hpp"

namespace windrisk {

/// Speed-to-energy conversion constants. Turbines produce nothing below the
/// cut-in speed or above the cut-out speed (blades feathered); in between the
/// map is linear with scaling factor k. Both band boundaries are inclusive.
struct ConversionParams {
  double cut_in_ms = 4.0;
  double cut_out_ms = 25.0;
  double k_gwh_per_ms = 1.0;

  void validate() const;
};

inline bool in_band(double speed, double cut_in, double cut_out) {
  return speed >= cut_in && speed <= cut_out;
}

/// e(h) = k * s(h) inside [cut_in, cut_out], 0 outside. Timestamps carry over.
HourlySeries speed_to_energy(const HourlySeries& speeds, const ConversionParams& params);

/// Optional calibration window, half-open [begin, end) in hour stamps.
struct CalibrationWindow {
  HourStamp begin;
  HourStamp end;
};

/// Scaling factor k such that mean daily energy produced over the window
/// equals mean daily demand: k = (days * sum(D)) / sum of in-band speeds,
/// with days = window hours / 24. Window defaults to the full series.
double calibrate_scaling(const HourlySeries& speeds, const DemandProfile& demand,
                         double cut_in, double cut_out,
                         std::optional<CalibrationWindow> window = std::nullopt);

struct NoWindStats {
  std::size_t count = 0;
  double fraction = 0.0;
};

/// Hours in which no energy is produced: s < cut_in or s > cut_out.
NoWindStats no_wind_fraction(const HourlySeries& speeds, double cut_in, double cut_out);

/// Weighted sum of per-site energy series sharing length and timestamps.
HourlySeries aggregate_sites(std::span<const HourlySeries> sites,
                             std::span<const double> weights);

}  // namespace windrisk
