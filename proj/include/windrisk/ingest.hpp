#pragma once

#include <string>
#include <vector>

#include "windrisk/series.hpp"

namespace windrisk {

/// Reads one tower column from a wind CSV into a gap-free m/s series.
///
/// Expected layout: header `timestamp,<tower-id>[,<tower-id>...]`, timestamps
/// `YYYY-MM-DDTHH:00`. Rows may arrive out of order; they are sorted before
/// gap checking. Missing hours, duplicate stamps and negative or non-finite
/// values are errors, never repaired.
HourlySeries parse_wind_csv(const std::string& path, const std::string& column);

/// Tower ids found in a wind CSV header, in file order.
std::vector<std::string> wind_csv_columns(const std::string& path);

/// Reads a 24-row demand CSV. Header is either
/// `hour,residential,commercial,industrial_agricultural` (any sector names
/// accepted) or `hour,total`; the total profile is the slot-wise sector sum.
DemandProfile parse_demand_csv(const std::string& path);

/// Serializes a series back to wind-CSV form under the given column name.
/// Values are written with enough digits to re-parse bit-equal.
void write_wind_csv(const std::string& path, const HourlySeries& series,
                    const std::string& column);

/// Cuts a gap-free series into complete local days. Leading/trailing partial
/// days land in the leftover lists.
DailyProfileSet split_days(const HourlySeries& series);

}  // namespace windrisk
