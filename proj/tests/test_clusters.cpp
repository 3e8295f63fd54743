#include <doctest.h>

#include "test_support.hpp"
#include "windrisk/clusters.hpp"

using namespace windrisk;

namespace {

DeficitIndicator from_string(const std::string& pattern) {
  DeficitIndicator indicator;
  for (char c : pattern) indicator.bits.push_back(c == '1');
  return indicator;
}

DeficitIndicator random_indicator(testsup::Rng& rng, std::size_t max_len) {
  DeficitIndicator indicator;
  std::size_t len = 1 + rng.index(max_len);
  double density = rng.uniform(0.05, 0.95);
  for (std::size_t i = 0; i < len; ++i) indicator.bits.push_back(rng.coin(density));
  return indicator;
}

}  // namespace

TEST_SUITE("clusters") {

TEST_CASE("deficit_indicator thresholds target against generation plus reserve") {
  BalanceSeries balance;
  balance.start = HourStamp::parse("2005-04-01T00:00");
  balance.target = {10.0, 10.0, 10.0};
  balance.generation = {9.0, 10.0, 4.0};
  balance.deficit = {1.0, 0.0, 6.0};
  balance.surplus = {0.0, 0.0, 0.0};

  SUBCASE("huge reserve blanks the indicator") {
    DeficitIndicator ind = deficit_indicator(balance, 1e9);
    CHECK(ind.deficit_hours() == 0);
  }
  SUBCASE("zero reserve marks every positive deficit") {
    DeficitIndicator ind = deficit_indicator(balance, 0.0);
    CHECK(ind.bits == std::vector<bool>{true, false, true});
  }
  SUBCASE("half-GWh reserve") {
    DeficitIndicator ind = deficit_indicator(balance, 0.5);
    CHECK(ind.bits == std::vector<bool>{true, false, true});
  }
  SUBCASE("reserve absorbing the first hour") {
    DeficitIndicator ind = deficit_indicator(balance, 1.0);
    CHECK(ind.bits == std::vector<bool>{false, false, true});
  }
}

TEST_CASE("find_runs on simple patterns") {
  SUBCASE("all deficit is one run") {
    DeficitIndicator ind;
    ind.bits.assign(360, true);
    RunList runs = find_runs(ind);
    REQUIRE(runs.runs.size() == 1);
    CHECK(runs.runs[0].start == 0);
    CHECK(runs.runs[0].length == 360);
  }
  SUBCASE("no deficit, no runs") {
    DeficitIndicator ind;
    ind.bits.assign(100, false);
    CHECK(find_runs(ind).runs.empty());
  }
  SUBCASE("1101110") {
    RunList runs = find_runs(from_string("1101110"));
    REQUIRE(runs.runs.size() == 2);
    CHECK(runs.runs[0].start == 0);
    CHECK(runs.runs[0].length == 2);
    CHECK(runs.runs[1].start == 3);
    CHECK(runs.runs[1].length == 3);
  }
}

TEST_CASE("run list structure invariants on random indicators") {
  testsup::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    DeficitIndicator ind = random_indicator(rng, 300);
    RunList runs = find_runs(ind);

    std::size_t popcount = ind.deficit_hours();
    CHECK(runs.total_deficit_hours() == popcount);
    for (std::size_t i = 0; i < runs.runs.size(); ++i) {
      CHECK(runs.runs[i].length >= 1);
      if (i > 0) {
        // Disjoint, ordered, separated by at least one clear hour.
        CHECK(runs.runs[i].start > runs.runs[i - 1].start + runs.runs[i - 1].length);
      }
    }
    // Round-trip through indicator_from_runs.
    DeficitIndicator rebuilt = indicator_from_runs(runs, ind.horizon());
    CHECK(rebuilt.bits == ind.bits);
  }
}

TEST_CASE("cluster probabilities on pinned examples") {
  SUBCASE("all hours deficit") {
    DeficitIndicator ind;
    ind.bits.assign(360, true);
    ClusterRiskProfile profile = cluster_probability(find_runs(ind), 360, 1);
    CHECK(profile.entries[0].window == 1.0);
    CHECK(profile.entries[0].run_survival == 1.0);
    CHECK(profile.entries[0].low() == 1.0);
    CHECK(profile.entries[0].high() == 1.0);
  }
  SUBCASE("no hours deficit") {
    DeficitIndicator ind;
    ind.bits.assign(50, false);
    ClusterRiskProfile profile = cluster_probability(find_runs(ind), 50, 10);
    for (const auto& entry : profile.entries) {
      CHECK(entry.low() == 0.0);
      CHECK(entry.high() == 0.0);
    }
  }
  SUBCASE("1101110: the worked example") {
    DeficitIndicator ind = from_string("1101110");
    ClusterRiskProfile profile = cluster_probability(find_runs(ind), 7, 3);
    // n=2: windows 3/6, runs 2/2.
    CHECK(profile.entries[1].window == 0.5);
    CHECK(profile.entries[1].run_survival == 1.0);
    CHECK(profile.entries[1].low() == 0.5);
    CHECK(profile.entries[1].high() == 1.0);
    // n=3: windows 1/5, runs 1/2.
    CHECK(profile.entries[2].window == 0.2);
    CHECK(profile.entries[2].run_survival == 0.5);
    CHECK(profile.entries[2].low() == 0.2);
    CHECK(profile.entries[2].high() == 0.5);
    // Re-verified against the independent enumerator.
    CHECK(testsup::oracle_window_count(ind.bits, 2) == 3);
    CHECK(testsup::oracle_window_count(ind.bits, 3) == 1);
    CHECK(testsup::oracle_runs_at_least(ind.bits, 3) == 1);
    CHECK(testsup::oracle_total_runs(ind.bits) == 2);
  }
}

TEST_CASE("estimators match the brute-force enumerator on random indicators") {
  testsup::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    DeficitIndicator ind = random_indicator(rng, 256);
    std::size_t n_max = std::min<std::size_t>(ind.horizon(), 1 + rng.index(20));
    ClusterRiskProfile profile = cluster_probability(find_runs(ind), ind.horizon(), n_max);

    double prev_window = 2.0, prev_run = 2.0;
    for (const auto& entry : profile.entries) {
      std::size_t windows = testsup::oracle_window_count(ind.bits, entry.n);
      std::size_t total_runs = testsup::oracle_total_runs(ind.bits);
      std::size_t surviving = testsup::oracle_runs_at_least(ind.bits, entry.n);
      double expected_window = static_cast<double>(windows) /
                               static_cast<double>(ind.horizon() - entry.n + 1);
      double expected_run = static_cast<double>(surviving) /
                            static_cast<double>(total_runs == 0 ? 1 : total_runs);
      REQUIRE(entry.window == expected_window);
      REQUIRE(entry.run_survival == expected_run);

      // Both estimators are non-increasing in n.
      REQUIRE(entry.window <= prev_window);
      REQUIRE(entry.run_survival <= prev_run);
      prev_window = entry.window;
      prev_run = entry.run_survival;
    }
  }
}

TEST_CASE("cluster_probability validates n_max") {
  DeficitIndicator ind = from_string("1010");
  RunList runs = find_runs(ind);
  CHECK_THROWS_AS(cluster_probability(runs, 4, 0), InvalidParameterError);
  CHECK_THROWS_AS(cluster_probability(runs, 4, 5), InvalidParameterError);
}

}  // TEST_SUITE
