#include "windrisk/ingest.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace windrisk {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_number(const std::string& cell, const std::string& where) {
  if (cell.empty()) {
    throw CsvFormatError("empty numeric cell at " + where);
  }
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(cell.c_str(), &end);
  if (end == cell.c_str() || *end != '\0' || errno == ERANGE) {
    throw CsvFormatError("unparseable number '" + cell + "' at " + where);
  }
  return v;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open file: " + path);
  }
  return in;
}

std::vector<std::string> read_header(std::ifstream& in, const std::string& path) {
  std::string line;
  if (!std::getline(in, line)) {
    throw CsvFormatError("empty file: " + path);
  }
  return split_csv_line(line);
}

}  // namespace

std::vector<std::string> wind_csv_columns(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<std::string> header = read_header(in, path);
  if (header.size() < 2 || header[0] != "timestamp") {
    throw CsvFormatError("wind CSV header must start with 'timestamp': " + path);
  }
  return {header.begin() + 1, header.end()};
}

HourlySeries parse_wind_csv(const std::string& path, const std::string& column) {
  std::ifstream in = open_or_throw(path);
  std::vector<std::string> header = read_header(in, path);
  if (header.empty() || header[0] != "timestamp") {
    throw CsvFormatError("wind CSV header must start with 'timestamp': " + path);
  }
  std::size_t col = 0;
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i] == column) {
      col = i;
      break;
    }
  }
  if (col == 0) {
    throw MissingColumnError("column '" + column + "' not found in " + path);
  }

  std::vector<std::pair<std::int64_t, double>> rows;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw CsvFormatError(path + ":" + std::to_string(lineno) + ": expected " +
                           std::to_string(header.size()) + " cells, got " +
                           std::to_string(cells.size()));
    }
    HourStamp stamp = HourStamp::parse(cells[0]);
    double v = parse_number(cells[col], path + ":" + std::to_string(lineno));
    if (!std::isfinite(v) || v < 0.0) {
      throw NegativeOrNonFiniteValueError(path + ":" + std::to_string(lineno) +
                                          ": value '" + cells[col] + "' at " +
                                          cells[0]);
    }
    rows.emplace_back(stamp.count(), v);
  }
  if (rows.empty()) {
    throw CsvFormatError("no data rows in " + path);
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::int64_t step = rows[i].first - rows[i - 1].first;
    if (step == 0) {
      throw DuplicateTimestampError("duplicate timestamp " +
                                    HourStamp(rows[i].first).to_string() + " in " + path);
    }
    if (step > 1) {
      throw GapInSeriesError(
          "gap in series: missing hour " + HourStamp(rows[i - 1].first + 1).to_string() +
              " in " + path,
          HourStamp(rows[i - 1].first + 1).to_string());
    }
  }

  HourlySeries series;
  series.start = HourStamp(rows.front().first);
  series.unit = Unit::MetersPerSecond;
  series.values.reserve(rows.size());
  for (const auto& [stamp, v] : rows) {
    (void)stamp;
    series.values.push_back(v);
  }
  return series;
}

DemandProfile parse_demand_csv(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<std::string> header = read_header(in, path);
  if (header.size() < 2 || header[0] != "hour") {
    throw CsvFormatError("demand CSV header must start with 'hour': " + path);
  }
  std::vector<std::string> sector_names{header.begin() + 1, header.end()};

  DemandProfile profile;
  std::vector<std::array<double, 24>> sector_slots(sector_names.size());
  std::array<bool, 24> seen{};
  std::size_t row_count = 0;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw CsvFormatError(path + ":" + std::to_string(lineno) + ": expected " +
                           std::to_string(header.size()) + " cells");
    }
    long hour = std::lround(parse_number(cells[0], path + ":" + std::to_string(lineno)));
    if (hour < 0 || hour > 23) {
      throw CsvFormatError(path + ":" + std::to_string(lineno) + ": hour out of 0..23");
    }
    if (seen[hour]) {
      throw CsvFormatError(path + ":" + std::to_string(lineno) + ": duplicate hour " +
                           std::to_string(hour));
    }
    seen[hour] = true;
    ++row_count;
    for (std::size_t s = 0; s < sector_names.size(); ++s) {
      double v = parse_number(cells[s + 1], path + ":" + std::to_string(lineno));
      if (!std::isfinite(v) || v < 0.0) {
        throw NegativeOrNonFiniteValueError(path + ":" + std::to_string(lineno) +
                                            ": sector value '" + cells[s + 1] + "'");
      }
      sector_slots[s][hour] = v;
    }
  }
  if (row_count != 24) {
    throw WrongRowCountError("demand CSV must have exactly 24 data rows, got " +
                             std::to_string(row_count) + " in " + path);
  }

  for (int h = 0; h < 24; ++h) {
    double total = 0.0;
    for (const auto& s : sector_slots) total += s[h];
    profile.slots[h] = total;
  }
  for (std::size_t s = 0; s < sector_names.size(); ++s) {
    profile.sectors.emplace_back(sector_names[s], sector_slots[s]);
  }
  profile.validate();
  return profile;
}

void write_wind_csv(const std::string& path, const HourlySeries& series,
                    const std::string& column) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write file: " + path);
  }
  out << "timestamp," << column << "\n";
  char buf[40];
  for (std::size_t i = 0; i < series.size(); ++i) {
    // %.17g round-trips any double exactly.
    std::snprintf(buf, sizeof(buf), "%.17g", series.values[i]);
    out << series.stamp_at(i).to_string() << ',' << buf << "\n";
  }
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

DailyProfileSet split_days(const HourlySeries& series) {
  DailyProfileSet result;
  const std::int64_t n = static_cast<std::int64_t>(series.size());

  std::int64_t first_midnight = 0;
  int start_hod = series.start.hour_of_day();
  if (start_hod != 0) first_midnight = 24 - start_hod;

  for (std::int64_t i = 0; i < std::min(first_midnight, n); ++i) {
    result.leading_leftover.push_back(series.values[i]);
  }

  std::int64_t i = first_midnight;
  while (i + 24 <= n) {
    DailyProfileSet::Day day;
    day.start = series.stamp_at(static_cast<std::size_t>(i));
    for (int h = 0; h < 24; ++h) {
      day.samples[h] = series.values[static_cast<std::size_t>(i + h)];
    }
    result.days.push_back(day);
    i += 24;
  }

  for (; i < n; ++i) {
    result.trailing_leftover.push_back(series.values[static_cast<std::size_t>(i)]);
  }
  return result;
}

}  // namespace windrisk
