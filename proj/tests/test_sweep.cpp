#include <doctest.h>

#include "test_support.hpp"
#include "windrisk/ingest.hpp"
#include "windrisk/power.hpp"
#include "windrisk/sweep.hpp"

using namespace windrisk;

namespace {

struct Fixture {
  DemandProfile demand;
  HourlySeries basis;

  Fixture() {
    demand = parse_demand_csv(testsup::fixture("demand.csv"));
    HourlySeries speeds = parse_wind_csv(testsup::fixture("wind_speeds.csv"), "T71");
    double k = calibrate_scaling(speeds, demand, 4.0, 25.0);
    basis = speed_to_energy(speeds, {4.0, 25.0, k});
  }
};

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("single-point sweep equals the directly computed scenario") {
  Fixture fx;
  SweepGrid grid{{0.15}, {5.0}, 15};
  std::vector<SweepRow> rows = run_sweep(fx.basis, fx.demand, grid);
  REQUIRE(rows.size() == 1);

  Scenario scenario = build_scenario(fx.basis, fx.demand, 0.15, 5.0);
  BalanceSeries balance = hourly_balance(scenario);
  CHECK(rows[0].max_deficit_gwh == max_deficit(balance));
  CHECK(rows[0].exceedance_hours == reserve_exceedance(balance, 5.0).size());
  CHECK(rows[0].critical == (rows[0].max_deficit_gwh > 5.0));

  DeficitIndicator ind = deficit_indicator(balance, 5.0);
  ClusterRiskProfile direct = cluster_probability(find_runs(ind), ind.horizon(), 15);
  REQUIRE(rows[0].clusters.entries.size() == direct.entries.size());
  for (std::size_t i = 0; i < direct.entries.size(); ++i) {
    CHECK(rows[0].clusters.entries[i].window == direct.entries[i].window);
    CHECK(rows[0].clusters.entries[i].run_survival == direct.entries[i].run_survival);
  }
}

TEST_CASE("rows come out p-major then R, and max deficit grows with p") {
  Fixture fx;
  SweepGrid grid;
  for (int i = 1; i <= 15; ++i) grid.penetrations.push_back(i / 100.0);
  grid.reserves_gwh = {2.5, 5.0};
  grid.n_max = 10;
  std::vector<SweepRow> rows = run_sweep(fx.basis, fx.demand, grid);
  REQUIRE(rows.size() == 30);

  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].penetration == grid.penetrations[i / 2]);
    CHECK(rows[i].reserve_gwh == grid.reserves_gwh[i % 2]);
  }
  // Monotone in p for fixed R.
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(rows[i].max_deficit_gwh >= rows[i - 2].max_deficit_gwh);
  }
}

TEST_CASE("first critical p in the sweep brackets the closed-form threshold") {
  Fixture fx;
  SweepGrid grid;
  for (int i = 1; i <= 15; ++i) grid.penetrations.push_back(i / 100.0);
  grid.reserves_gwh = {5.0};
  grid.n_max = 5;
  std::vector<SweepRow> rows = run_sweep(fx.basis, fx.demand, grid);

  double p_star = critical_threshold(fx.basis, fx.demand, 5.0, 0.15);
  double first_critical = 0.0;
  for (const SweepRow& row : rows) {
    if (row.critical) {
      first_critical = row.penetration;
      break;
    }
  }
  REQUIRE(first_critical > 0.0);
  // p* lies within one grid step below the first critical point.
  CHECK(first_critical >= p_star);
  CHECK(first_critical - 0.01 <= p_star);

  // The flag agrees with the threshold at every grid point.
  for (const SweepRow& row : rows) {
    CHECK(row.critical == (row.penetration > p_star));
  }
}

TEST_CASE("sweep output is a pure function of its inputs") {
  Fixture fx;
  SweepGrid grid{{0.05, 0.10, 0.15}, {2.5, 5.0}, 8};
  std::vector<SweepRow> a = run_sweep(fx.basis, fx.demand, grid);
  std::vector<SweepRow> b = run_sweep(fx.basis, fx.demand, grid);
  CHECK(sweep_to_csv(a) == sweep_to_csv(b));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].max_deficit_gwh == b[i].max_deficit_gwh);
    CHECK(a[i].exceedance_hours == b[i].exceedance_hours);
    for (std::size_t n = 0; n < a[i].clusters.entries.size(); ++n) {
      CHECK(a[i].clusters.entries[n].window == b[i].clusters.entries[n].window);
      CHECK(a[i].clusters.entries[n].run_survival ==
            b[i].clusters.entries[n].run_survival);
    }
  }
}

TEST_CASE("csv layout") {
  Fixture fx;
  SweepGrid grid{{0.15}, {5.0}, 3};
  std::string csv = sweep_to_csv(run_sweep(fx.basis, fx.demand, grid));
  CHECK(csv.rfind("p,reserve_gwh,max_deficit_gwh,exceedance_hours,critical\n", 0) == 0);
  CHECK(csv.find("0.1500,5.0000,14.2300,") != std::string::npos);
}

TEST_CASE("grid validation") {
  Fixture fx;
  SweepGrid empty;
  CHECK_THROWS_AS(run_sweep(fx.basis, fx.demand, empty), InvalidParameterError);
  SweepGrid bad_p{{0.0}, {5.0}, 5};
  CHECK_THROWS_AS(run_sweep(fx.basis, fx.demand, bad_p), InvalidParameterError);
  SweepGrid bad_r{{0.1}, {-1.0}, 5};
  CHECK_THROWS_AS(run_sweep(fx.basis, fx.demand, bad_r), InvalidParameterError);
}

}  // TEST_SUITE
