#include "windrisk/series.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

namespace windrisk {

HourStamp HourStamp::from_civil(int year, unsigned month, unsigned day, unsigned hour) {
  using namespace std::chrono;
  year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
  if (!ymd.ok()) {
    throw CsvFormatError("invalid calendar date " + std::to_string(year) + "-" +
                         std::to_string(month) + "-" + std::to_string(day));
  }
  if (hour > 23) {
    throw CsvFormatError("hour out of range: " + std::to_string(hour));
  }
  std::int64_t days = sys_days{ymd}.time_since_epoch().count();
  return HourStamp(days * 24 + static_cast<std::int64_t>(hour));
}

HourStamp HourStamp::parse(const std::string& text) {
  int y = 0;
  unsigned mo = 0, d = 0, h = 0, mi = 0;
  char sep = 0;
  int consumed = 0;
  // Accept "YYYY-MM-DDTHH:00" (a space instead of 'T' is tolerated).
  if (std::sscanf(text.c_str(), "%d-%2u-%2u%c%2u:%2u%n", &y, &mo, &d, &sep, &h, &mi,
                  &consumed) != 6 ||
      (sep != 'T' && sep != ' ') || consumed != static_cast<int>(text.size())) {
    throw CsvFormatError("unparseable timestamp: '" + text + "'");
  }
  if (mi != 0) {
    throw CsvFormatError("timestamp not on the hour: '" + text + "'");
  }
  return from_civil(y, mo, d, h);
}

std::string HourStamp::to_string() const {
  using namespace std::chrono;
  std::int64_t days = h_ / 24;
  std::int64_t hour = h_ % 24;
  if (hour < 0) {
    hour += 24;
    days -= 1;
  }
  year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:00", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hour));
  return buf;
}

void HourlySeries::validate() const {
  if (values.empty()) {
    throw InvalidParameterError("hourly series is empty");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw NegativeOrNonFiniteValueError("negative or non-finite value at " +
                                          stamp_at(i).to_string());
    }
  }
}

double DemandProfile::daily_total() const {
  double sum = 0.0;
  for (double v : slots) sum += v;
  return sum;
}

void DemandProfile::validate() const {
  bool any_positive = false;
  for (double v : slots) {
    if (!std::isfinite(v) || v < 0.0) {
      throw NegativeOrNonFiniteValueError("demand slot negative or non-finite");
    }
    if (v > 0.0) any_positive = true;
  }
  if (!any_positive) {
    throw InvalidParameterError("demand profile is all zero");
  }
  for (const auto& [name, sector_slots] : sectors) {
    (void)name;
    for (double v : sector_slots) {
      if (!std::isfinite(v) || v < 0.0) {
        throw NegativeOrNonFiniteValueError("sector slot negative or non-finite");
      }
    }
  }
  if (!sectors.empty()) {
    for (int h = 0; h < 24; ++h) {
      double sum = 0.0;
      for (const auto& [name, sector_slots] : sectors) {
        (void)name;
        sum += sector_slots[h];
      }
      if (std::fabs(sum - slots[h]) > 1e-9) {
        throw InvalidParameterError("sector slots do not sum to total at hour " +
                                    std::to_string(h));
      }
    }
  }
}

}  // namespace windrisk
