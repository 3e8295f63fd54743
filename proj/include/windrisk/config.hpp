#pragma once

#include <string>
#include <vector>

#include "windrisk/errors.hpp"

namespace windrisk {

/// Everything a run needs, collected up front. Loaded from a JSON config
/// file, then overridden by CLI flags; fully validated before any
/// computation starts so a bad sweep dies in milliseconds, not mid-run.
struct RunConfig {
  // Inputs
  std::string wind_csv;
  std::string tower;  // empty = first tower column in the file
  std::string demand_csv;
  std::string annual_csv;

  // Conversion
  double cut_in_ms = 4.0;
  double cut_out_ms = 25.0;

  // Scenario
  double penetration = 0.15;
  double reserve_gwh = 5.0;
  double reference_p = 0.15;  // threshold scaling anchor

  // Clusters / ACF / fleet
  std::size_t n_max = 15;
  std::size_t max_lag = 6;
  double confidence = 0.95;
  double nameplate_gw = 0.25;
  double fast_fraction = 0.25;

  // Growth fit
  double target_percent = 15.0;

  // Sweep grid
  std::vector<double> sweep_penetrations;
  std::vector<double> sweep_reserves_gwh;

  // Output
  std::string out_dir = "out";
  bool plots = true;

  /// Which inputs a subcommand needs.
  enum Needs : unsigned { NeedWind = 1u, NeedDemand = 2u, NeedAnnual = 4u };

  /// Fail-fast check: required files exist, every parameter satisfies the
  /// downstream type invariants.
  void validate(unsigned needs) const;
};

/// Parses a JSON config file into a RunConfig (missing keys keep defaults).
RunConfig load_config(const std::string& path);

/// Default sweep grid: p = 1%..15% step 1%, R = 2.5 and 5 GWh.
void apply_default_sweep_grid(RunConfig& config);

}  // namespace windrisk
