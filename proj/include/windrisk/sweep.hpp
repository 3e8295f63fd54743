#pragma once

#include <string>
#include <vector>

#include "windrisk/clusters.hpp"
#include "windrisk/scenario.hpp"

namespace windrisk {

/// Grid of scenario sweep points: every penetration crossed with every
/// reserve value.
struct SweepGrid {
  std::vector<double> penetrations;  // each in (0, 1]
  std::vector<double> reserves_gwh;  // each >= 0
  std::size_t n_max = 15;

  void validate() const;
};

struct SweepRow {
  double penetration = 0.0;
  double reserve_gwh = 0.0;
  double max_deficit_gwh = 0.0;
  std::size_t exceedance_hours = 0;  // hours with d(h) > R
  ClusterRiskProfile clusters;
  bool critical = false;  // max deficit > reserve
};

/// Evaluates every grid point independently (concurrently when worthwhile)
/// and assembles rows in deterministic p-major, then R, order. Each point is
/// recomputed from scratch rather than scaled from a baseline; the scaling
/// shortcut stays a cross-checked property, not a hidden dependency.
std::vector<SweepRow> run_sweep(const HourlySeries& wind_basis, const DemandProfile& demand,
                                const SweepGrid& grid);

/// `p,reserve_gwh,max_deficit_gwh,exceedance_hours,critical` rows.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace windrisk
