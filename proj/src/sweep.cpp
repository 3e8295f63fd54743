#include "windrisk/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <thread>

namespace windrisk {

void SweepGrid::validate() const {
  if (penetrations.empty() || reserves_gwh.empty()) {
    throw InvalidParameterError("sweep grid must list at least one p and one R");
  }
  for (double p : penetrations) {
    if (!(p > 0.0) || !(p <= 1.0)) {
      throw InvalidParameterError("sweep penetration out of (0, 1]: " + std::to_string(p));
    }
  }
  for (double r : reserves_gwh) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw InvalidParameterError("sweep reserve must be finite and >= 0");
    }
  }
  if (n_max < 1) {
    throw InvalidParameterError("n_max must be >= 1");
  }
}

namespace {

SweepRow evaluate_point(const HourlySeries& wind_basis, const DemandProfile& demand,
                        double p, double reserve, std::size_t n_max) {
  SweepRow row;
  row.penetration = p;
  row.reserve_gwh = reserve;

  Scenario scenario = build_scenario(wind_basis, demand, p, reserve);
  BalanceSeries balance = hourly_balance(scenario);
  row.max_deficit_gwh = max_deficit(balance);
  row.exceedance_hours = reserve_exceedance(balance, reserve).size();
  row.critical = row.max_deficit_gwh > reserve;

  DeficitIndicator indicator = deficit_indicator(balance, reserve);
  RunList runs = find_runs(indicator);
  row.clusters = cluster_probability(runs, indicator.horizon(),
                                     std::min(n_max, indicator.horizon()));
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const HourlySeries& wind_basis, const DemandProfile& demand,
                                const SweepGrid& grid) {
  grid.validate();
  const std::size_t np = grid.penetrations.size();
  const std::size_t nr = grid.reserves_gwh.size();
  const std::size_t total = np * nr;

  std::vector<SweepRow> rows(total);
  auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < total; i += stride) {
      double p = grid.penetrations[i / nr];
      double r = grid.reserves_gwh[i % nr];
      rows[i] = evaluate_point(wind_basis, demand, p, r, grid.n_max);
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  std::size_t n_threads = std::min<std::size_t>(hw == 0 ? 1 : hw, total);
  if (n_threads <= 1 || total < 4) {
    worker(0, 1);
  } else {
    // Each worker owns a disjoint slot stripe, so assembly is a no-op and
    // the result never depends on scheduling.
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
      pool.emplace_back(worker, t, n_threads);
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string csv = "p,reserve_gwh,max_deficit_gwh,exceedance_hours,critical\n";
  char buf[160];
  for (const SweepRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.4f,%.4f,%.4f,%zu,%d\n", row.penetration,
                  row.reserve_gwh, row.max_deficit_gwh, row.exceedance_hours,
                  row.critical ? 1 : 0);
    csv += buf;
  }
  return csv;
}

}  // namespace windrisk
