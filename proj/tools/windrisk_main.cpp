// windrisk: hour-resolution wind-intermittency analytics.
//
// Subcommands mirror the analysis stages: validate inputs, compute hourly
// energy balances at a penetration level, summarize by hour of day, measure
// deficit-cluster probabilities and autocorrelation, fit penetration growth,
// find the critical penetration threshold, sweep (p, R) grids, or run the
// whole report. Exit codes: 0 ok, 1 validation/data error, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "windrisk/acf.hpp"
#include "windrisk/clusters.hpp"
#include "windrisk/config.hpp"
#include "windrisk/growth.hpp"
#include "windrisk/ingest.hpp"
#include "windrisk/io.hpp"
#include "windrisk/power.hpp"
#include "windrisk/report.hpp"
#include "windrisk/scenario.hpp"
#include "windrisk/stats.hpp"
#include "windrisk/svg.hpp"
#include "windrisk/sweep.hpp"

namespace {

using namespace windrisk;

std::string p4(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// Flags shared by every subcommand; only values the user actually passed
// override the config file.
struct Overrides {
  std::optional<std::string> config_path;
  std::optional<std::string> wind, demand, annual, tower, out;
  std::optional<double> penetration, reserve, cut_in, cut_out, reference_p;
  std::optional<double> confidence, nameplate_gw, fast_fraction, target_percent;
  std::optional<std::size_t> n_max, max_lag;
  bool no_plots = false;
};

void add_common_options(CLI::App* cmd, Overrides& ov) {
  cmd->add_option("--config", ov.config_path, "JSON config file (flags override it)");
  cmd->add_option("--wind", ov.wind, "wind CSV (timestamp,<tower>[,...])");
  cmd->add_option("--tower", ov.tower, "tower column to read (default: first)");
  cmd->add_option("--demand", ov.demand, "demand CSV (hour,<sector>[,...])");
  cmd->add_option("--annual", ov.annual, "annual CSV (year,wind_gwh,total_gwh)");
  cmd->add_option("--penetration", ov.penetration, "wind penetration fraction in (0,1]");
  cmd->add_option("--reserve", ov.reserve, "reserve capacity R in GWh");
  cmd->add_option("--reference-p", ov.reference_p, "reference penetration for scaling");
  cmd->add_option("--cut-in", ov.cut_in, "cut-in speed in m/s");
  cmd->add_option("--cut-out", ov.cut_out, "cut-out speed in m/s");
  cmd->add_option("--nmax", ov.n_max, "max deficit-cluster length in hours");
  cmd->add_option("--max-lag", ov.max_lag, "max autocorrelation lag in hours");
  cmd->add_option("--confidence", ov.confidence, "confidence level for lag uncertainty");
  cmd->add_option("--nameplate-gw", ov.nameplate_gw, "compensation plant nameplate in GW");
  cmd->add_option("--fast-fraction", ov.fast_fraction,
                  "fast-response fraction of nameplate in (0,1]");
  cmd->add_option("--target-percent", ov.target_percent, "growth-fit target percentage");
  cmd->add_option("--out", ov.out, "output directory");
  cmd->add_flag("--no-plots", ov.no_plots, "skip SVG output");
}

RunConfig resolve_config(const Overrides& ov, unsigned needs) {
  RunConfig config;
  if (ov.config_path) config = load_config(*ov.config_path);
  if (ov.wind) config.wind_csv = *ov.wind;
  if (ov.tower) config.tower = *ov.tower;
  if (ov.demand) config.demand_csv = *ov.demand;
  if (ov.annual) config.annual_csv = *ov.annual;
  if (ov.penetration) config.penetration = *ov.penetration;
  if (ov.reserve) config.reserve_gwh = *ov.reserve;
  if (ov.reference_p) config.reference_p = *ov.reference_p;
  if (ov.cut_in) config.cut_in_ms = *ov.cut_in;
  if (ov.cut_out) config.cut_out_ms = *ov.cut_out;
  if (ov.n_max) config.n_max = *ov.n_max;
  if (ov.max_lag) config.max_lag = *ov.max_lag;
  if (ov.confidence) config.confidence = *ov.confidence;
  if (ov.nameplate_gw) config.nameplate_gw = *ov.nameplate_gw;
  if (ov.fast_fraction) config.fast_fraction = *ov.fast_fraction;
  if (ov.target_percent) config.target_percent = *ov.target_percent;
  if (ov.out) config.out_dir = *ov.out;
  if (ov.no_plots) config.plots = false;
  apply_default_sweep_grid(config);
  config.validate(needs);
  return config;
}

std::string out_path(const RunConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.out_dir);
  return (std::filesystem::path(config.out_dir) / name).string();
}

struct LoadedWind {
  HourlySeries speeds;
  std::string tower;
};

LoadedWind load_wind(const RunConfig& config) {
  std::string tower = config.tower;
  if (tower.empty()) {
    tower = wind_csv_columns(config.wind_csv).front();
  }
  return {parse_wind_csv(config.wind_csv, tower), tower};
}

ConversionParams conversion_params(const RunConfig& config, double k) {
  ConversionParams params;
  params.cut_in_ms = config.cut_in_ms;
  params.cut_out_ms = config.cut_out_ms;
  params.k_gwh_per_ms = k;
  return params;
}

// speeds -> calibrated GWh basis (mean daily production == mean daily demand).
HourlySeries make_basis(const HourlySeries& speeds, const DemandProfile& demand,
                        const RunConfig& config, double* k_out) {
  double k = calibrate_scaling(speeds, demand, config.cut_in_ms, config.cut_out_ms);
  if (k_out) *k_out = k;
  return speed_to_energy(speeds, conversion_params(config, k));
}

std::vector<std::string> hour_labels() {
  std::vector<std::string> labels;
  labels.reserve(24);
  for (int h = 0; h < 24; ++h) labels.push_back(std::to_string(h));
  return labels;
}

nlohmann::ordered_json boxplot_json(const BoxplotSummary& s) {
  return {{"min", s.minimum},       {"q1", s.q1},
          {"median", s.median},     {"q3", s.q3},
          {"max", s.maximum},       {"lower_whisker", s.lower_whisker},
          {"upper_whisker", s.upper_whisker}, {"outliers", s.outliers}};
}

// ---------------------------------------------------------------------------

void run_validate(const RunConfig& config, Report* report) {
  LoadedWind wind = load_wind(config);
  wind.speeds.validate();
  DailyProfileSet days = split_days(wind.speeds);
  NoWindStats no_wind = no_wind_fraction(wind.speeds, config.cut_in_ms, config.cut_out_ms);

  std::printf("wind: %zu hours from %s (tower %s), %zu complete days\n",
              wind.speeds.size(), wind.speeds.start.to_string().c_str(),
              wind.tower.c_str(), days.days.size());
  std::printf("no-wind hours: %zu (%s%%)\n", no_wind.count, p4(no_wind.fraction * 100.0).c_str());

  nlohmann::ordered_json section;
  section["hours"] = wind.speeds.size();
  section["start"] = wind.speeds.start.to_string();
  section["tower"] = wind.tower;
  section["complete_days"] = days.days.size();
  section["leftover_hours"] = days.leading_leftover.size() + days.trailing_leftover.size();
  section["no_wind"] = {{"count", no_wind.count}, {"fraction", no_wind.fraction}};

  if (!config.demand_csv.empty()) {
    DemandProfile demand = parse_demand_csv(config.demand_csv);
    std::printf("demand: daily total %s GWh, %zu sectors\n", p4(demand.daily_total()).c_str(),
                demand.sectors.size());
    section["demand_daily_total_gwh"] = demand.daily_total();
    section["demand_sectors"] = demand.sectors.size();
  }
  if (!config.annual_csv.empty()) {
    AnnualTable annual = parse_annual_csv(config.annual_csv);
    std::printf("annual: %zu years %d..%d\n", annual.wind_gwh.points.size(),
                annual.wind_gwh.points.front().year, annual.wind_gwh.points.back().year);
    section["annual_years"] = annual.wind_gwh.points.size();
  }
  std::printf("validate: ok\n");
  if (report) report->section("validate") = std::move(section);
}

BalanceSeries compute_balance(const RunConfig& config, double* k_out,
                              HourlySeries* basis_out) {
  LoadedWind wind = load_wind(config);
  DemandProfile demand = parse_demand_csv(config.demand_csv);
  double k = 0.0;
  HourlySeries basis = make_basis(wind.speeds, demand, config, &k);
  if (k_out) *k_out = k;
  Scenario scenario = build_scenario(basis, demand, config.penetration, config.reserve_gwh);
  BalanceSeries balance = hourly_balance(scenario);
  if (basis_out) *basis_out = std::move(basis);
  return balance;
}

std::string balance_csv(const BalanceSeries& balance) {
  std::string csv = "timestamp,generation_gwh,target_gwh,deficit_gwh,surplus_gwh\n";
  char buf[160];
  for (std::size_t h = 0; h < balance.size(); ++h) {
    std::snprintf(buf, sizeof(buf), "%s,%.4f,%.4f,%.4f,%.4f\n",
                  balance.stamp_at(h).to_string().c_str(), balance.generation[h],
                  balance.target[h], balance.deficit[h], balance.surplus[h]);
    csv += buf;
  }
  return csv;
}

void run_balance(const RunConfig& config, Report* report) {
  double k = 0.0;
  BalanceSeries balance = compute_balance(config, &k, nullptr);

  double maxdef = 0.0, maxsur = 0.0;
  std::size_t maxdef_hour = 0, deficit_hours = 0;
  for (std::size_t h = 0; h < balance.size(); ++h) {
    if (balance.deficit[h] > maxdef) {
      maxdef = balance.deficit[h];
      maxdef_hour = h;
    }
    maxsur = std::max(maxsur, balance.surplus[h]);
    if (balance.deficit[h] > 0.0) ++deficit_hours;
  }

  std::printf("k = %s GWh per (m/s-hour)\n", p4(k).c_str());
  std::printf("p = %s, reserve = %s GWh\n", p4(config.penetration).c_str(),
              p4(config.reserve_gwh).c_str());
  std::printf("max deficit = %s GWh at %s\n", p4(maxdef).c_str(),
              balance.stamp_at(maxdef_hour).to_string().c_str());
  std::printf("max surplus = %s GWh\n", p4(maxsur).c_str());
  std::printf("deficit hours = %zu of %zu\n", deficit_hours, balance.size());

  write_text_file(out_path(config, "balance.csv"), balance_csv(balance));
  if (config.plots) {
    std::vector<LineSeries> series(2);
    series[0] = {"target (p x demand)", "#d62728", {}, false};
    series[1] = {"wind generation", "#1f77b4", {}, false};
    for (std::size_t h = 0; h < balance.size(); ++h) {
      series[0].points.emplace_back(static_cast<double>(h), balance.target[h]);
      series[1].points.emplace_back(static_cast<double>(h), balance.generation[h]);
    }
    emit_svg(out_path(config, "balance_timeline.svg"),
             line_chart_svg("Hourly generation vs target", "hour", "GWh", series));
    emit_svg(out_path(config, "balance_bars.svg"),
             balance_bars_svg("Hourly deficit (red) and surplus (green)", balance.deficit,
                              balance.surplus));
  }

  if (report) {
    nlohmann::ordered_json section;
    section["k_gwh_per_ms"] = k;
    section["max_deficit_gwh"] = maxdef;
    section["max_deficit_at"] = balance.stamp_at(maxdef_hour).to_string();
    section["max_surplus_gwh"] = maxsur;
    section["deficit_hours"] = deficit_hours;
    section["hours"] = balance.size();
    report->section("balance") = std::move(section);
  }
}

void run_boxplot(const RunConfig& config, Report* report) {
  BalanceSeries balance = compute_balance(config, nullptr, nullptr);
  auto deficit_box = hour_of_day_boxplots(balance, BalanceField::Deficit);
  auto generation_box = hour_of_day_boxplots(balance, BalanceField::Generation);

  std::size_t outliers = 0;
  double peak_median = 0.0;
  int peak_hour = 0;
  for (int h = 0; h < 24; ++h) {
    outliers += deficit_box[h].outliers.size();
    if (deficit_box[h].median > peak_median) {
      peak_median = deficit_box[h].median;
      peak_hour = h;
    }
  }
  std::printf("deficit boxplots: peak median %s GWh at hour %d, %zu outliers total\n",
              p4(peak_median).c_str(), peak_hour, outliers);

  if (config.plots) {
    std::vector<std::string> labels = hour_labels();
    emit_svg(out_path(config, "deficit_boxplot.svg"),
             boxplot_chart_svg("Energy deficit by hour of day", "hour of day", "GWh",
                               deficit_box, labels));
    emit_svg(out_path(config, "generation_boxplot.svg"),
             boxplot_chart_svg("Wind generation by hour of day", "hour of day", "GWh",
                               generation_box, labels));
  }

  if (report) {
    nlohmann::ordered_json section;
    section["convention"] = boxplot_convention();
    nlohmann::ordered_json def = nlohmann::ordered_json::array();
    nlohmann::ordered_json gen = nlohmann::ordered_json::array();
    for (int h = 0; h < 24; ++h) {
      def.push_back(boxplot_json(deficit_box[h]));
      gen.push_back(boxplot_json(generation_box[h]));
    }
    section["deficit_by_hour"] = std::move(def);
    section["generation_by_hour"] = std::move(gen);
    report->section("boxplots") = std::move(section);
  }
}

void run_clusters(const RunConfig& config, Report* report) {
  BalanceSeries balance = compute_balance(config, nullptr, nullptr);
  DeficitIndicator indicator = deficit_indicator(balance, config.reserve_gwh);
  RunList runs = find_runs(indicator);
  std::size_t n_max = std::min(config.n_max, indicator.horizon());
  ClusterRiskProfile profile = cluster_probability(runs, indicator.horizon(), n_max);

  std::printf("deficit hours beyond reserve: %zu of %zu, %zu maximal runs\n",
              indicator.deficit_hours(), indicator.horizon(), runs.runs.size());
  std::printf("n  %s  %s\n", ClusterRiskProfile::window_estimator_name(),
              ClusterRiskProfile::run_estimator_name());
  for (const auto& entry : profile.entries) {
    std::printf("%zu  %s  %s\n", entry.n, p4(entry.window).c_str(),
                p4(entry.run_survival).c_str());
  }

  if (config.plots) {
    emit_svg(out_path(config, "cluster_probability.svg"),
             interval_chart_svg("Probability of n-hour deficit clusters", "cluster length n",
                                "probability", profile));
  }
  if (report) {
    nlohmann::ordered_json section;
    section["reserve_gwh"] = config.reserve_gwh;
    section["deficit_hours"] = indicator.deficit_hours();
    section["maximal_runs"] = runs.runs.size();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& entry : profile.entries) {
      rows.push_back({{"n", entry.n},
                      {ClusterRiskProfile::window_estimator_name(), entry.window},
                      {ClusterRiskProfile::run_estimator_name(), entry.run_survival},
                      {"low", entry.low()},
                      {"high", entry.high()}});
    }
    section["probabilities"] = std::move(rows);
    report->section("clusters") = std::move(section);
  }
}

void run_acf(const RunConfig& config, Report* report) {
  LoadedWind wind = load_wind(config);
  DailyProfileSet days = split_days(wind.speeds);
  std::vector<LagDistribution> distributions = hhacf_distribution(days, config.max_lag);

  std::printf("hhACF over %zu days, lags 1..%zu\n", days.days.size(), config.max_lag);
  for (const LagDistribution& dist : distributions) {
    double unc = lag_uncertainty(dist, config.confidence, false);
    double unc_out = lag_uncertainty(dist, config.confidence, true);
    std::printf("lag %zu: median rho = %s, uncertainty = %s%% (with outliers %s%%)\n",
                dist.lag, p4(dist.summary.median).c_str(), p4(unc).c_str(),
                p4(unc_out).c_str());
  }

  if (config.plots) {
    std::vector<BoxplotSummary> summaries;
    std::vector<std::string> labels;
    for (const LagDistribution& dist : distributions) {
      summaries.push_back(dist.summary);
      labels.push_back(std::to_string(dist.lag));
    }
    emit_svg(out_path(config, "acf_boxplot.svg"),
             boxplot_chart_svg("Hour-to-hour autocorrelation by lag", "lag (hours)",
                               "correlation coefficient", summaries, labels));
  }
  if (report) {
    nlohmann::ordered_json section;
    section["days"] = days.days.size();
    section["confidence"] = config.confidence;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const LagDistribution& dist : distributions) {
      rows.push_back({{"lag", dist.lag},
                      {"summary", boxplot_json(dist.summary)},
                      {"skipped_days", dist.skipped_days},
                      {"uncertainty_pct", lag_uncertainty(dist, config.confidence, false)},
                      {"uncertainty_with_outliers_pct",
                       lag_uncertainty(dist, config.confidence, true)}});
    }
    section["lags"] = std::move(rows);
    report->section("acf") = std::move(section);
  }
}

void run_fleet(const RunConfig& config, Report* report) {
  BalanceSeries balance = compute_balance(config, nullptr, nullptr);
  std::array<double, 3> worst{};
  for (std::size_t n = 1; n <= 3; ++n) {
    worst[n - 1] = worst_window_deficit(balance.deficit, n);
  }
  FleetPlan plan = size_compensation_fleet(worst, config.nameplate_gw, config.fast_fraction);

  for (const FleetClass& cls : plan.classes) {
    std::printf("lag %zu h: worst deficit %s GWh -> %zu plants (%s GW, fast %s)\n",
                cls.lag_hours, p4(cls.worst_deficit_gwh).c_str(), cls.plant_count,
                p4(cls.nameplate_gw).c_str(), p4(cls.fast_fraction).c_str());
  }
  if (report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const FleetClass& cls : plan.classes) {
      rows.push_back({{"lag_hours", cls.lag_hours},
                      {"worst_deficit_gwh", cls.worst_deficit_gwh},
                      {"nameplate_gw", cls.nameplate_gw},
                      {"fast_fraction", cls.fast_fraction},
                      {"plant_count", cls.plant_count}});
    }
    report->section("fleet") = std::move(rows);
  }
}

void run_fit(const RunConfig& config, Report* report) {
  AnnualTable annual = parse_annual_csv(config.annual_csv);
  AnnualSeries percent = penetration_series(annual.wind_gwh, annual.total_gwh);
  ExpFit fit = fit_exponential(percent);

  std::printf("a=%s b=%s r2=%s\n", p4(fit.a).c_str(), p4(fit.b).c_str(), p4(fit.r2).c_str());
  double year = 0.0;
  bool crossed = true;
  try {
    year = projection_year(fit, config.target_percent);
    std::printf("%s%% reached in year %s\n", p4(config.target_percent).c_str(),
                p4(year).c_str());
  } catch (const NoCrossingError&) {
    crossed = false;
    std::printf("%s%% is never reached by this fit\n", p4(config.target_percent).c_str());
  }

  if (config.plots) {
    std::vector<LineSeries> series(2);
    series[0] = {"observed penetration", "#1f77b4", {}, true};
    for (const auto& pt : percent.points) {
      series[0].points.emplace_back(static_cast<double>(pt.year), pt.value);
    }
    series[1] = {"exponential fit", "#d62728", {}, false};
    double last_year = crossed ? std::max(year, static_cast<double>(percent.points.back().year))
                               : static_cast<double>(percent.points.back().year);
    for (double t = fit.t0; t <= last_year + 1e-9; t += 0.25) {
      series[1].points.emplace_back(t, fit.predict(t));
    }
    emit_svg(out_path(config, "growth_fit.svg"),
             line_chart_svg("Wind penetration by year", "year", "percent of total", series));
  }
  if (report) {
    nlohmann::ordered_json section;
    section["a"] = fit.a;
    section["b"] = fit.b;
    section["t0"] = fit.t0;
    section["r2"] = fit.r2;
    section["converged"] = fit.converged;
    section["degenerate"] = fit.degenerate;
    section["target_percent"] = config.target_percent;
    if (crossed) {
      section["target_year"] = year;
    } else {
      section["target_year"] = nullptr;
    }
    report->section("fit") = std::move(section);
  }
}

void run_threshold(const RunConfig& config, Report* report) {
  LoadedWind wind = load_wind(config);
  DemandProfile demand = parse_demand_csv(config.demand_csv);
  double k = 0.0;
  HourlySeries basis = make_basis(wind.speeds, demand, config, &k);

  Scenario reference =
      build_scenario(basis, demand, config.reference_p, config.reserve_gwh);
  double maxdef = max_deficit(hourly_balance(reference));
  double p_star = critical_threshold(basis, demand, config.reserve_gwh, config.reference_p);

  std::printf("max deficit at p=%s: %s GWh\n", p4(config.reference_p).c_str(),
              p4(maxdef).c_str());
  std::printf("reserve: %s GWh\n", p4(config.reserve_gwh).c_str());
  std::printf("p* = %s%%\n", p4(p_star * 100.0).c_str());

  if (report) {
    report->section("threshold") = {{"reference_p", config.reference_p},
                                    {"reserve_gwh", config.reserve_gwh},
                                    {"max_deficit_gwh", maxdef},
                                    {"p_star", p_star}};
  }
}

void run_sweep_cmd(const RunConfig& config, Report* report) {
  LoadedWind wind = load_wind(config);
  DemandProfile demand = parse_demand_csv(config.demand_csv);
  HourlySeries basis = make_basis(wind.speeds, demand, config, nullptr);

  SweepGrid grid;
  grid.penetrations = config.sweep_penetrations;
  grid.reserves_gwh = config.sweep_reserves_gwh;
  grid.n_max = config.n_max;
  std::vector<SweepRow> rows = run_sweep(basis, demand, grid);

  write_text_file(out_path(config, "sweep.csv"), sweep_to_csv(rows));
  std::printf("sweep: %zu grid points -> %s\n", rows.size(),
              out_path(config, "sweep.csv").c_str());
  for (double reserve : grid.reserves_gwh) {
    for (const SweepRow& row : rows) {
      if (row.reserve_gwh == reserve && row.critical) {
        std::printf("R = %s GWh: first critical p = %s\n", p4(reserve).c_str(),
                    p4(row.penetration).c_str());
        break;
      }
    }
  }

  if (config.plots) {
    std::vector<LineSeries> series;
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
    std::size_t color = 0;
    for (double reserve : grid.reserves_gwh) {
      LineSeries s;
      s.label = "R = " + p4(reserve) + " GWh";
      s.color = palette[color++ % 5];
      s.markers = true;
      for (const SweepRow& row : rows) {
        if (row.reserve_gwh == reserve) {
          s.points.emplace_back(row.penetration, row.max_deficit_gwh);
        }
      }
      series.push_back(std::move(s));
    }
    emit_svg(out_path(config, "sweep_max_deficit.svg"),
             line_chart_svg("Max hourly deficit vs penetration", "penetration p",
                            "max deficit (GWh)", series));
  }

  if (report) {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const SweepRow& row : rows) {
      nlohmann::ordered_json clusters = nlohmann::ordered_json::array();
      for (const auto& entry : row.clusters.entries) {
        clusters.push_back({{"n", entry.n},
                            {ClusterRiskProfile::window_estimator_name(), entry.window},
                            {ClusterRiskProfile::run_estimator_name(), entry.run_survival}});
      }
      table.push_back({{"p", row.penetration},
                       {"reserve_gwh", row.reserve_gwh},
                       {"max_deficit_gwh", row.max_deficit_gwh},
                       {"exceedance_hours", row.exceedance_hours},
                       {"critical", row.critical},
                       {"clusters", std::move(clusters)}});
    }
    report->section("sweep") = std::move(table);
  }
}

void run_report(const RunConfig& config) {
  Report report(config);
  report.add_input("wind_csv", config.wind_csv);
  report.add_input("demand_csv", config.demand_csv);
  if (!config.annual_csv.empty()) report.add_input("annual_csv", config.annual_csv);

  run_validate(config, &report);
  run_balance(config, &report);
  run_boxplot(config, &report);
  run_clusters(config, &report);
  run_acf(config, &report);
  run_fleet(config, &report);
  if (!config.annual_csv.empty()) run_fit(config, &report);
  run_threshold(config, &report);
  run_sweep_cmd(config, &report);

  std::string path = out_path(config, "report.json");
  emit_report(report, path);
  std::printf("report: %s\n", path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hour-resolution wind-intermittency risk analytics"};
  app.require_subcommand(1);

  Overrides ov;
  CLI::App* cmd_validate = app.add_subcommand("validate", "ingest inputs and check invariants");
  CLI::App* cmd_balance = app.add_subcommand("balance", "hourly generation/target balance");
  CLI::App* cmd_boxplot = app.add_subcommand("boxplot", "hour-of-day deficit distributions");
  CLI::App* cmd_clusters = app.add_subcommand("clusters", "n-hour deficit-cluster probabilities");
  CLI::App* cmd_acf = app.add_subcommand("acf", "hour-to-hour autocorrelation by lag");
  CLI::App* cmd_fit = app.add_subcommand("fit", "exponential penetration growth fit");
  CLI::App* cmd_threshold = app.add_subcommand("threshold", "critical penetration threshold");
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "scenario sweep over (p, R) grid");
  CLI::App* cmd_report = app.add_subcommand("report", "run everything, emit report.json");
  for (CLI::App* cmd : {cmd_validate, cmd_balance, cmd_boxplot, cmd_clusters, cmd_acf,
                        cmd_fit, cmd_threshold, cmd_sweep, cmd_report}) {
    add_common_options(cmd, ov);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_validate->parsed()) {
      run_validate(resolve_config(ov, RunConfig::NeedWind), nullptr);
    } else if (cmd_balance->parsed()) {
      run_balance(resolve_config(ov, RunConfig::NeedWind | RunConfig::NeedDemand), nullptr);
    } else if (cmd_boxplot->parsed()) {
      run_boxplot(resolve_config(ov, RunConfig::NeedWind | RunConfig::NeedDemand), nullptr);
    } else if (cmd_clusters->parsed()) {
      run_clusters(resolve_config(ov, RunConfig::NeedWind | RunConfig::NeedDemand), nullptr);
    } else if (cmd_acf->parsed()) {
      run_acf(resolve_config(ov, RunConfig::NeedWind), nullptr);
    } else if (cmd_fit->parsed()) {
      run_fit(resolve_config(ov, RunConfig::NeedAnnual), nullptr);
    } else if (cmd_threshold->parsed()) {
      run_threshold(resolve_config(ov, RunConfig::NeedWind | RunConfig::NeedDemand), nullptr);
    } else if (cmd_sweep->parsed()) {
      run_sweep_cmd(resolve_config(ov, RunConfig::NeedWind | RunConfig::NeedDemand), nullptr);
    } else if (cmd_report->parsed()) {
      run_report(resolve_config(ov, RunConfig::NeedWind | RunConfig::NeedDemand));
    }
  } catch (const windrisk::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
