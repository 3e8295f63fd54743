#pragma once

#include <cstddef>
#include <vector>

#include "windrisk/scenario.hpp"

namespace windrisk {

/// One boolean per hour: true where the target beats generation plus reserve.
struct DeficitIndicator {
  std::vector<bool> bits;

  std::size_t horizon() const { return bits.size(); }
  std::size_t deficit_hours() const;
};

/// Maximal all-deficit run: `length` consecutive deficit hours starting at
/// `start`, bounded by non-deficit hours (or the horizon edges).
struct Run {
  std::size_t start = 0;
  std::size_t length = 0;
};

struct RunList {
  std::vector<Run> runs;

  std::size_t total_deficit_hours() const;
  std::size_t runs_at_least(std::size_t n) const;
};

/// Probability interval per cluster length n, bracketed by two estimators:
///   window:       fraction of length-n windows that are all deficit,
///                 (# all-deficit windows) / (T - n + 1)
///   run-survival: fraction of maximal runs at least n hours long,
///                 (# runs with length >= n) / max(1, # runs)
/// Both are non-increasing in n. Which pair of calculations the bracketing
/// red/blue curves in the source material used is not documented there; this
/// pair is pinned here and labeled in every report.
struct ClusterRiskProfile {
  struct Entry {
    std::size_t n = 0;
    double window = 0.0;
    double run_survival = 0.0;

    double low() const { return window < run_survival ? window : run_survival; }
    double high() const { return window < run_survival ? run_survival : window; }
  };

  std::vector<Entry> entries;  // n = 1..n_max in order

  static const char* window_estimator_name() { return "window-fraction"; }
  static const char* run_estimator_name() { return "run-survival"; }
};

/// bit(h) = true iff t(h) > g(h) + R.
DeficitIndicator deficit_indicator(const BalanceSeries& balance, double reserve_gwh);

/// Maximal runs of consecutive true bits, in order.
RunList find_runs(const DeficitIndicator& indicator);

/// Reconstructs the indicator a RunList came from (given the horizon).
DeficitIndicator indicator_from_runs(const RunList& runs, std::size_t horizon);

ClusterRiskProfile cluster_probability(const RunList& runs, std::size_t horizon,
                                       std::size_t n_max);

}  // namespace windrisk
