#include "windrisk/growth.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace windrisk {

void AnnualSeries::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].value) || points[i].value < 0.0) {
      throw NegativeOrNonFiniteValueError("annual value for year " +
                                          std::to_string(points[i].year));
    }
    if (i > 0 && points[i].year <= points[i - 1].year) {
      throw InvalidParameterError("years must be strictly increasing");
    }
  }
}

double ExpFit::predict(double t) const {
  return a * std::exp(b * (t - static_cast<double>(t0)));
}

AnnualTable parse_annual_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw CsvFormatError("empty file: " + path);
  }
  {
    std::stringstream header(line);
    std::string c0, c1, c2;
    std::getline(header, c0, ',');
    std::getline(header, c1, ',');
    std::getline(header, c2, ',');
    if (c0 != "year" || c1 != "wind_gwh" || c2 != "total_gwh") {
      throw CsvFormatError("annual CSV header must be 'year,wind_gwh,total_gwh': " + path);
    }
  }

  AnnualTable table;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::stringstream row(line);
    std::string year_cell, wind_cell, total_cell;
    if (!std::getline(row, year_cell, ',') || !std::getline(row, wind_cell, ',') ||
        !std::getline(row, total_cell, ',')) {
      throw CsvFormatError(path + ":" + std::to_string(lineno) + ": expected 3 cells");
    }
    errno = 0;
    char* end = nullptr;
    long year = std::strtol(year_cell.c_str(), &end, 10);
    if (end == year_cell.c_str() || errno == ERANGE) {
      throw CsvFormatError(path + ":" + std::to_string(lineno) + ": bad year");
    }
    double wind = std::strtod(wind_cell.c_str(), nullptr);
    double total = std::strtod(total_cell.c_str(), nullptr);
    table.wind_gwh.points.push_back({static_cast<int>(year), wind});
    table.total_gwh.points.push_back({static_cast<int>(year), total});
  }
  table.wind_gwh.validate();
  table.total_gwh.validate();
  return table;
}

AnnualSeries penetration_series(const AnnualSeries& wind, const AnnualSeries& total) {
  wind.validate();
  total.validate();
  if (wind.points.size() != total.points.size()) {
    throw YearMismatchError("wind and total series cover different year counts");
  }
  AnnualSeries percent;
  percent.points.reserve(wind.points.size());
  for (std::size_t i = 0; i < wind.points.size(); ++i) {
    if (wind.points[i].year != total.points[i].year) {
      throw YearMismatchError("year mismatch at index " + std::to_string(i) + ": " +
                              std::to_string(wind.points[i].year) + " vs " +
                              std::to_string(total.points[i].year));
    }
    if (!(total.points[i].value > 0.0)) {
      throw ZeroTotalError("total generation is zero in year " +
                           std::to_string(total.points[i].year));
    }
    percent.points.push_back(
        {wind.points[i].year, 100.0 * wind.points[i].value / total.points[i].value});
  }
  return percent;
}

namespace {

double sse_at(const AnnualSeries& series, int t0, double a, double b) {
  double sse = 0.0;
  for (const auto& pt : series.points) {
    double r = pt.value - a * std::exp(b * static_cast<double>(pt.year - t0));
    sse += r * r;
  }
  return sse;
}

}  // namespace

ExpFit fit_exponential(const AnnualSeries& series) {
  series.validate();
  if (series.points.size() < 3) {
    throw InvalidParameterError("exponential fit needs at least 3 points");
  }
  for (const auto& pt : series.points) {
    if (!(pt.value > 0.0)) {
      throw NonPositiveValueError("exponential fit needs strictly positive values; year " +
                                  std::to_string(pt.year) + " is not");
    }
  }

  const int t0 = series.points.front().year;
  const std::size_t n = series.points.size();

  // Log-linear seed: least squares of ln(y) against (t - t0).
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& pt : series.points) {
    double x = static_cast<double>(pt.year - t0);
    double ly = std::log(pt.value);
    sx += x;
    sy += ly;
    sxx += x * x;
    sxy += x * ly;
  }
  double denom = static_cast<double>(n) * sxx - sx * sx;
  if (denom == 0.0) {
    throw SingularFitError("all years coincide; slope is undetermined");
  }
  double b = (static_cast<double>(n) * sxy - sx * sy) / denom;
  double ln_a = (sy - b * sx) / static_cast<double>(n);
  double a = std::exp(ln_a);

  // Damped Gauss-Newton on r_i = y_i - a*exp(b*x_i).
  double best_a = a, best_b = b;
  double best_sse = sse_at(series, t0, a, b);
  bool converged = false;
  for (int iter = 0; iter < 200; ++iter) {
    double jtj00 = 0.0, jtj01 = 0.0, jtj11 = 0.0;
    double jtr0 = 0.0, jtr1 = 0.0;
    for (const auto& pt : series.points) {
      double x = static_cast<double>(pt.year - t0);
      double e = std::exp(best_b * x);
      double r = pt.value - best_a * e;
      double j0 = -e;             // d r / d a
      double j1 = -best_a * x * e;  // d r / d b
      jtj00 += j0 * j0;
      jtj01 += j0 * j1;
      jtj11 += j1 * j1;
      jtr0 += j0 * r;
      jtr1 += j1 * r;
    }
    // Gradient of the SSE objective is 2 * J^T r.
    double grad_norm = 2.0 * std::hypot(jtr0, jtr1);
    if (grad_norm < 1e-10) {
      converged = true;
      break;
    }
    double det = jtj00 * jtj11 - jtj01 * jtj01;
    if (det == 0.0 || !std::isfinite(det)) break;
    double step_a = -(jtj11 * jtr0 - jtj01 * jtr1) / det;
    double step_b = -(jtj00 * jtr1 - jtj01 * jtr0) / det;

    // Halve the step until it improves (or bottoms out).
    double scale = 1.0;
    bool improved = false;
    for (int halvings = 0; halvings < 60; ++halvings) {
      double cand_a = best_a + scale * step_a;
      double cand_b = best_b + scale * step_b;
      double cand_sse = sse_at(series, t0, cand_a, cand_b);
      if (std::isfinite(cand_sse) && cand_sse < best_sse && cand_a > 0.0) {
        best_a = cand_a;
        best_b = cand_b;
        best_sse = cand_sse;
        improved = true;
        break;
      }
      scale *= 0.5;
    }
    if (!improved) {
      // No downhill progress left at any step length; treat as converged to
      // numerical precision.
      converged = grad_norm < 1e-6;
      break;
    }
  }

  ExpFit fit;
  fit.a = best_a;
  fit.b = best_b;
  fit.t0 = t0;
  fit.sse = best_sse;
  fit.converged = converged;

  double mean = 0.0;
  for (const auto& pt : series.points) mean += pt.value;
  mean /= static_cast<double>(n);
  double sstot = 0.0;
  for (const auto& pt : series.points) sstot += (pt.value - mean) * (pt.value - mean);
  if (sstot == 0.0) {
    fit.degenerate = true;
    fit.r2 = (best_sse == 0.0) ? 1.0 : 0.0;
  } else {
    fit.r2 = 1.0 - best_sse / sstot;
  }
  return fit;
}

double projection_year(const ExpFit& fit, double target_percent) {
  if (!(target_percent > 0.0)) {
    throw NoCrossingError("target must be positive");
  }
  if (!(fit.a > 0.0)) {
    throw InvalidParameterError("fit level a must be positive");
  }
  if (fit.b == 0.0) {
    if (target_percent == fit.a) return static_cast<double>(fit.t0);
    throw NoCrossingError("flat fit never reaches the target");
  }
  if (fit.b < 0.0 && target_percent > fit.a) {
    throw NoCrossingError("decaying fit never reaches a target above its level");
  }
  return static_cast<double>(fit.t0) + std::log(target_percent / fit.a) / fit.b;
}

}  // namespace windrisk
