#include <doctest.h>

#include <fstream>

#include "test_support.hpp"
#include "windrisk/ingest.hpp"
#include "windrisk/io.hpp"

using namespace windrisk;

namespace {

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  for (const auto& line : lines) out << line << "\n";
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("timestamp parse and format round-trip") {
  HourStamp stamp = HourStamp::parse("2005-04-01T00:00");
  CHECK(stamp.to_string() == "2005-04-01T00:00");
  CHECK(stamp.hour_of_day() == 0);
  CHECK((stamp + 23).hour_of_day() == 23);
  CHECK((stamp + 24).to_string() == "2005-04-02T00:00");

  CHECK_THROWS_AS(HourStamp::parse("2005-04-01T07:30"), CsvFormatError);
  CHECK_THROWS_AS(HourStamp::parse("2005-13-01T00:00"), CsvFormatError);
  CHECK_THROWS_AS(HourStamp::parse("garbage"), CsvFormatError);
}

TEST_CASE("bundled fixture ingests whole") {
  HourlySeries series = parse_wind_csv(testsup::fixture("wind_speeds.csv"), "T71");
  CHECK(series.size() == 360);
  CHECK(series.start.to_string() == "2005-04-01T00:00");
  CHECK(series.unit == Unit::MetersPerSecond);
  series.validate();

  HourlySeries other = parse_wind_csv(testsup::fixture("wind_speeds.csv"), "T72");
  CHECK(other.size() == 360);
  CHECK(other.values != series.values);
}

TEST_CASE("missing column is an error") {
  CHECK_THROWS_AS(parse_wind_csv(testsup::fixture("wind_speeds.csv"), "T99"),
                  MissingColumnError);
}

TEST_CASE("gap is an error naming the first missing hour") {
  testsup::TempDir dir("gap");
  std::vector<std::string> lines{"timestamp,T1"};
  HourStamp start = HourStamp::parse("2005-04-01T00:00");
  for (int i = 0; i < 72; ++i) {
    if ((start + i).to_string() == "2005-04-03T07:00") continue;  // drop one hour
    lines.push_back((start + i).to_string() + ",8.5");
  }
  write_lines(dir.file("gap.csv"), lines);
  try {
    parse_wind_csv(dir.file("gap.csv"), "T1");
    FAIL("expected GapInSeriesError");
  } catch (const GapInSeriesError& e) {
    CHECK(e.first_missing() == "2005-04-03T07:00");
  }
}

TEST_CASE("negative and non-finite values rejected") {
  testsup::TempDir dir("neg");
  write_lines(dir.file("neg.csv"),
              {"timestamp,T1", "2005-04-01T00:00,5.0", "2005-04-01T01:00,-2.1"});
  CHECK_THROWS_AS(parse_wind_csv(dir.file("neg.csv"), "T1"), NegativeOrNonFiniteValueError);

  write_lines(dir.file("nan.csv"),
              {"timestamp,T1", "2005-04-01T00:00,5.0", "2005-04-01T01:00,nan"});
  CHECK_THROWS_AS(parse_wind_csv(dir.file("nan.csv"), "T1"), NegativeOrNonFiniteValueError);
}

TEST_CASE("duplicate timestamp rejected") {
  testsup::TempDir dir("dup");
  write_lines(dir.file("dup.csv"), {"timestamp,T1", "2005-04-01T00:00,5.0",
                                    "2005-04-01T01:00,6.0", "2005-04-01T01:00,6.5"});
  CHECK_THROWS_AS(parse_wind_csv(dir.file("dup.csv"), "T1"), DuplicateTimestampError);
}

TEST_CASE("out-of-order rows are sorted before gap checking") {
  testsup::TempDir dir("order");
  write_lines(dir.file("shuffled.csv"),
              {"timestamp,T1", "2005-04-01T02:00,7.0", "2005-04-01T00:00,5.0",
               "2005-04-01T03:00,8.0", "2005-04-01T01:00,6.0"});
  HourlySeries series = parse_wind_csv(dir.file("shuffled.csv"), "T1");
  CHECK(series.values == std::vector<double>{5.0, 6.0, 7.0, 8.0});
  CHECK(series.start.to_string() == "2005-04-01T00:00");
}

TEST_CASE("csv round-trip reproduces values bit-equal") {
  HourlySeries series = parse_wind_csv(testsup::fixture("wind_speeds.csv"), "T71");
  testsup::TempDir dir("roundtrip");
  write_wind_csv(dir.file("copy.csv"), series, "T71");
  HourlySeries again = parse_wind_csv(dir.file("copy.csv"), "T71");
  CHECK(again.start == series.start);
  CHECK(again.values == series.values);
}

TEST_CASE("demand fixture parses with three sectors summing to total") {
  DemandProfile demand = parse_demand_csv(testsup::fixture("demand.csv"));
  CHECK(demand.sectors.size() == 3);
  CHECK(demand.sectors[0].first == "residential");
  CHECK(demand.sectors[2].first == "industrial_agricultural");
  for (int h = 0; h < 24; ++h) {
    double sum = 0.0;
    for (const auto& [name, slots] : demand.sectors) sum += slots[h];
    CHECK(demand.slots[h] == doctest::Approx(sum).epsilon(1e-12));
  }
  // Peak slots carry the deficit landmark: 14.23 / 0.15 GWh.
  CHECK(demand.slots[16] == doctest::Approx(14.23 / 0.15).epsilon(1e-12));
  CHECK(demand.slots[17] == demand.slots[16]);
}

TEST_CASE("demand row-count and value errors") {
  testsup::TempDir dir("demand");
  std::vector<std::string> lines{"hour,total"};
  for (int h = 0; h < 23; ++h) lines.push_back(std::to_string(h) + ",10.0");
  write_lines(dir.file("short.csv"), lines);
  CHECK_THROWS_AS(parse_demand_csv(dir.file("short.csv")), WrongRowCountError);

  lines.push_back("23,-1.0");
  write_lines(dir.file("neg.csv"), lines);
  CHECK_THROWS_AS(parse_demand_csv(dir.file("neg.csv")), NegativeOrNonFiniteValueError);
}

TEST_CASE("single-sector demand file: total equals that sector") {
  testsup::TempDir dir("demand1");
  std::vector<std::string> lines{"hour,total"};
  for (int h = 0; h < 24; ++h) lines.push_back(std::to_string(h) + "," + std::to_string(h + 1) + ".5");
  write_lines(dir.file("one.csv"), lines);
  DemandProfile demand = parse_demand_csv(dir.file("one.csv"));
  CHECK(demand.sectors.size() == 1);
  for (int h = 0; h < 24; ++h) {
    CHECK(demand.slots[h] == demand.sectors[0].second[h]);
  }
}

TEST_CASE("split_days counts complete days") {
  HourlySeries series;
  series.start = HourStamp::parse("2005-04-01T00:00");

  SUBCASE("360 hours -> 15 days") {
    series.values.assign(360, 1.0);
    DailyProfileSet days = split_days(series);
    CHECK(days.days.size() == 15);
    CHECK(days.leading_leftover.empty());
    CHECK(days.trailing_leftover.empty());
  }
  SUBCASE("25 hours -> 1 day + 1 leftover") {
    series.values.assign(25, 1.0);
    DailyProfileSet days = split_days(series);
    CHECK(days.days.size() == 1);
    CHECK(days.trailing_leftover.size() == 1);
  }
  SUBCASE("23 hours -> 0 days, 23 leftovers") {
    series.values.assign(23, 1.0);
    DailyProfileSet days = split_days(series);
    CHECK(days.days.empty());
    CHECK(days.leading_leftover.size() + days.trailing_leftover.size() == 23);
  }
  SUBCASE("mid-day start sheds a partial leading day") {
    series.start = HourStamp::parse("2005-04-01T05:00");
    series.values.assign(48, 2.0);
    DailyProfileSet days = split_days(series);
    CHECK(days.leading_leftover.size() == 19);
    CHECK(days.days.size() == 1);
    CHECK(days.days[0].start.to_string() == "2005-04-02T00:00");
    CHECK(days.trailing_leftover.size() == 5);
  }
}

TEST_CASE("split_days concatenation reproduces the input exactly") {
  testsup::Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    HourlySeries series;
    series.start = HourStamp::parse("2005-04-01T00:00") +
                   static_cast<std::int64_t>(rng.index(30));
    std::size_t n = 1 + rng.index(200);
    for (std::size_t i = 0; i < n; ++i) series.values.push_back(rng.uniform(0.0, 20.0));

    DailyProfileSet days = split_days(series);
    std::vector<double> rebuilt = days.leading_leftover;
    for (const auto& day : days.days) {
      rebuilt.insert(rebuilt.end(), day.samples.begin(), day.samples.end());
    }
    rebuilt.insert(rebuilt.end(), days.trailing_leftover.begin(),
                   days.trailing_leftover.end());
    REQUIRE(rebuilt == series.values);
  }
}

}  // TEST_SUITE
