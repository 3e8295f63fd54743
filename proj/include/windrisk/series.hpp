#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "windrisk/errors.hpp"

namespace windrisk {

/// Naive local calendar hour: hours since 1970-01-01T00:00, no timezone or
/// DST arithmetic. All data in this library are hour-indexed profiles, so a
/// plain hour count is the whole story.
class HourStamp {
 public:
  HourStamp() = default;
  explicit HourStamp(std::int64_t hours_since_epoch) : h_(hours_since_epoch) {}

  static HourStamp from_civil(int year, unsigned month, unsigned day, unsigned hour);

  /// Parses "YYYY-MM-DDTHH:00". Throws CsvFormatError on anything else.
  static HourStamp parse(const std::string& text);

  std::int64_t count() const { return h_; }
  int hour_of_day() const {
    std::int64_t m = h_ % 24;
    return static_cast<int>(m < 0 ? m + 24 : m);
  }

  /// Formats back to "YYYY-MM-DDTHH:00".
  std::string to_string() const;

  HourStamp operator+(std::int64_t hours) const { return HourStamp(h_ + hours); }
  std::int64_t operator-(HourStamp other) const { return h_ - other.h_; }
  auto operator<=>(const HourStamp&) const = default;

 private:
  std::int64_t h_ = 0;
};

enum class Unit { MetersPerSecond, GigawattHours };

/// Gap-free hourly sample vector. The universal carrier: wind speed while
/// unit is m/s, dispatchable energy once converted to GWh.
struct HourlySeries {
  HourStamp start;
  std::vector<double> values;
  Unit unit = Unit::MetersPerSecond;

  std::size_t size() const { return values.size(); }
  HourStamp stamp_at(std::size_t i) const { return start + static_cast<std::int64_t>(i); }
  int hour_of_day_at(std::size_t i) const { return stamp_at(i).hour_of_day(); }

  /// Enforces the type invariants: non-empty, every value finite and >= 0.
  void validate() const;
};

/// 24-slot hour-of-day demand shape in GWh per hour, optionally split into
/// named sector profiles whose slot-wise sum equals the total.
struct DemandProfile {
  std::array<double, 24> slots{};
  std::vector<std::pair<std::string, std::array<double, 24>>> sectors;

  double daily_total() const;
  void validate() const;
};

/// 24-sample slices cut from an HourlySeries at local-midnight boundaries.
/// Partial leading/trailing days are kept aside, never silently dropped.
struct DailyProfileSet {
  struct Day {
    HourStamp start;  // always a midnight
    std::array<double, 24> samples{};
  };

  std::vector<Day> days;
  std::vector<double> leading_leftover;
  std::vector<double> trailing_leftover;
};

}  // namespace windrisk
