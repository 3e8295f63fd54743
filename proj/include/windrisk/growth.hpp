#pragma once

#include <string>
#include <vector>

#include "windrisk/errors.hpp"

namespace windrisk {

/// Yearly observations, e.g. GWh produced or percent of total generation.
struct AnnualSeries {
  struct Point {
    int year = 0;
    double value = 0.0;
  };

  std::vector<Point> points;

  void validate() const;  // years strictly increasing, values finite >= 0
};

/// y(t) = a * exp(b * (t - t0)); r2 is computed in the original space, not
/// log space (the two differ, and the reported coefficient is against the
/// raw percent data).
struct ExpFit {
  double a = 0.0;       // level at t0
  double b = 0.0;       // growth rate per year
  int t0 = 0;           // reference year (first data year)
  double r2 = 0.0;
  double sse = 0.0;     // residual sum of squares at (a, b)
  bool converged = true;
  bool degenerate = false;  // constant data, zero total variance

  double predict(double t) const;
};

/// Reads `year,wind_gwh,total_gwh` rows.
struct AnnualTable {
  AnnualSeries wind_gwh;
  AnnualSeries total_gwh;
};

AnnualTable parse_annual_csv(const std::string& path);

/// Percent of total produced from wind, year by year: 100 * wind / total.
AnnualSeries penetration_series(const AnnualSeries& wind, const AnnualSeries& total);

/// Least-squares exponential fit in the original space: log-linear seed, then
/// damped Gauss-Newton until the gradient norm of the squared-residual
/// objective drops below 1e-10 (or 200 iterations, after which the best
/// iterate is returned flagged non-converged).
ExpFit fit_exponential(const AnnualSeries& series);

/// Year at which the fit reaches target: t* = t0 + ln(target/a)/b.
double projection_year(const ExpFit& fit, double target_percent);

}  // namespace windrisk
