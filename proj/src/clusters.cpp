#include "windrisk/clusters.hpp"

namespace windrisk {

std::size_t DeficitIndicator::deficit_hours() const {
  std::size_t count = 0;
  for (bool b : bits) count += b ? 1 : 0;
  return count;
}

std::size_t RunList::total_deficit_hours() const {
  std::size_t sum = 0;
  for (const Run& r : runs) sum += r.length;
  return sum;
}

std::size_t RunList::runs_at_least(std::size_t n) const {
  std::size_t count = 0;
  for (const Run& r : runs) count += (r.length >= n) ? 1 : 0;
  return count;
}

DeficitIndicator deficit_indicator(const BalanceSeries& balance, double reserve_gwh) {
  if (!(reserve_gwh >= 0.0)) {
    throw InvalidParameterError("reserve must be >= 0");
  }
  DeficitIndicator indicator;
  indicator.bits.reserve(balance.size());
  for (std::size_t h = 0; h < balance.size(); ++h) {
    indicator.bits.push_back(balance.target[h] > balance.generation[h] + reserve_gwh);
  }
  return indicator;
}

RunList find_runs(const DeficitIndicator& indicator) {
  RunList list;
  std::size_t i = 0;
  const std::size_t T = indicator.horizon();
  while (i < T) {
    if (!indicator.bits[i]) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < T && indicator.bits[i]) ++i;
    list.runs.push_back({start, i - start});
  }
  return list;
}

DeficitIndicator indicator_from_runs(const RunList& runs, std::size_t horizon) {
  DeficitIndicator indicator;
  indicator.bits.assign(horizon, false);
  for (const Run& r : runs.runs) {
    for (std::size_t i = 0; i < r.length; ++i) indicator.bits[r.start + i] = true;
  }
  return indicator;
}

ClusterRiskProfile cluster_probability(const RunList& runs, std::size_t horizon,
                                       std::size_t n_max) {
  if (n_max < 1 || n_max > horizon) {
    throw InvalidParameterError("need 1 <= n_max <= horizon");
  }
  ClusterRiskProfile profile;
  profile.entries.reserve(n_max);
  const std::size_t total_runs = runs.runs.size();
  for (std::size_t n = 1; n <= n_max; ++n) {
    // A run of length L contains L - n + 1 all-deficit windows of length n.
    std::size_t windows = 0;
    for (const Run& r : runs.runs) {
      if (r.length >= n) windows += r.length - n + 1;
    }
    ClusterRiskProfile::Entry entry;
    entry.n = n;
    entry.window = static_cast<double>(windows) / static_cast<double>(horizon - n + 1);
    entry.run_survival = static_cast<double>(runs.runs_at_least(n)) /
                         static_cast<double>(total_runs == 0 ? 1 : total_runs);
    profile.entries.push_back(entry);
  }
  return profile;
}

}  // namespace windrisk
