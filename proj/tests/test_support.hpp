#pragma once

// Shared test plumbing: fixture lookup, a deterministic RNG, temp dirs, CLI
// invocation, and independent oracle implementations. The oracles
// deliberately re-derive results with their own code paths so library bugs
// cannot hide behind self-agreement.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "windrisk/stats.hpp"

namespace testsup {

inline std::string fixture_dir() {
  if (const char* env = std::getenv("WINDRISK_DATA")) return env;
  // Fall back to walking up from the CWD (direct ./windrisk_tests runs).
  std::filesystem::path probe = std::filesystem::current_path();
  for (int i = 0; i < 4; ++i) {
    if (std::filesystem::exists(probe / "data" / "wind_speeds.csv")) {
      return (probe / "data").string();
    }
    probe = probe.parent_path();
  }
  throw std::runtime_error("cannot locate data/ fixtures; set WINDRISK_DATA");
}

inline std::string fixture(const std::string& name) {
  return (std::filesystem::path(fixture_dir()) / name).string();
}

inline std::string golden(const std::string& name) {
  if (const char* env = std::getenv("WINDRISK_GOLDEN")) {
    return (std::filesystem::path(env) / name).string();
  }
  std::filesystem::path probe = std::filesystem::current_path();
  for (int i = 0; i < 4; ++i) {
    if (std::filesystem::exists(probe / "tests" / "golden" / name)) {
      return (probe / "tests" / "golden" / name).string();
    }
    probe = probe.parent_path();
  }
  throw std::runtime_error("cannot locate tests/golden; set WINDRISK_GOLDEN");
}

inline std::string cli_path() {
  if (const char* env = std::getenv("WINDRISK_CLI")) return env;
  std::filesystem::path probe = std::filesystem::current_path();
  for (int i = 0; i < 4; ++i) {
    if (std::filesystem::exists(probe / "windrisk")) return (probe / "windrisk").string();
    probe = probe.parent_path();
  }
  throw std::runtime_error("cannot locate windrisk CLI; set WINDRISK_CLI");
}

// splitmix64: tiny, seedable, identical everywhere.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  bool coin(double p_true) { return uniform(0.0, 1.0) < p_true; }
};

struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("windrisk_" + tag + "_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }

  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

inline CliResult run_cli(const std::string& args) {
  TempDir dir("cli_out");
  std::string capture = dir.file("capture.txt");
  std::string command = cli_path() + " " + args + " > " + capture + " 2>&1";
  int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  std::FILE* f = std::fopen(capture.c_str(), "rb");
  if (f) {
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof(buf), f)) > 0) {
      result.output.append(buf, got);
    }
    std::fclose(f);
  }
  return result;
}

// --- independent oracles ----------------------------------------------------

// Sort/hinge/fence boxplot re-derivation with explicit even/odd branches.
inline windrisk::BoxplotSummary oracle_boxplot(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  auto slice_median = [&](std::size_t lo, std::size_t hi) {
    std::size_t len = hi - lo + 1;
    if (len % 2 == 1) return samples[lo + (len - 1) / 2];
    return (samples[lo + len / 2 - 1] + samples[lo + len / 2]) / 2.0;
  };

  windrisk::BoxplotSummary box;
  box.minimum = samples[0];
  box.maximum = samples[n - 1];
  if (n % 2 == 1) {
    box.median = samples[(n - 1) / 2];
    box.q1 = slice_median(0, (n - 1) / 2);
    box.q3 = slice_median((n - 1) / 2, n - 1);
  } else {
    box.median = (samples[n / 2 - 1] + samples[n / 2]) / 2.0;
    box.q1 = slice_median(0, n / 2 - 1);
    box.q3 = slice_median(n / 2, n - 1);
  }
  double fence_lo = box.q1 - 1.5 * (box.q3 - box.q1);
  double fence_hi = box.q3 + 1.5 * (box.q3 - box.q1);
  box.lower_whisker = box.q1;
  box.upper_whisker = box.q3;
  for (std::size_t i = 0; i < n; ++i) {
    if (samples[i] >= fence_lo) {
      box.lower_whisker = samples[i];
      break;
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    if (samples[i] <= fence_hi) {
      box.upper_whisker = samples[i];
      break;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (samples[i] < fence_lo || samples[i] > fence_hi) box.outliers.push_back(samples[i]);
  }
  return box;
}

inline bool boxplot_equal(const windrisk::BoxplotSummary& a,
                          const windrisk::BoxplotSummary& b) {
  return a.minimum == b.minimum && a.q1 == b.q1 && a.median == b.median && a.q3 == b.q3 &&
         a.maximum == b.maximum && a.lower_whisker == b.lower_whisker &&
         a.upper_whisker == b.upper_whisker && a.outliers == b.outliers;
}

// Direct O(T*n) window scan: number of length-n windows that are all true.
inline std::size_t oracle_window_count(const std::vector<bool>& bits, std::size_t n) {
  if (n > bits.size()) return 0;
  std::size_t count = 0;
  for (std::size_t start = 0; start + n <= bits.size(); ++start) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!bits[start + i]) {
        all = false;
        break;
      }
    }
    if (all) ++count;
  }
  return count;
}

// Maximal runs counted by scanning transitions, not by RunList.
inline std::size_t oracle_total_runs(const std::vector<bool>& bits) {
  std::size_t runs = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] && (i == 0 || !bits[i - 1])) ++runs;
  }
  return runs;
}

inline std::size_t oracle_runs_at_least(const std::vector<bool>& bits, std::size_t n) {
  std::size_t count = 0;
  std::size_t len = 0;
  for (std::size_t i = 0; i <= bits.size(); ++i) {
    if (i < bits.size() && bits[i]) {
      ++len;
    } else {
      if (len >= n) ++count;
      len = 0;
    }
  }
  return count;
}

// Textbook centered Pearson correlation, each sum in its own pass.
inline double oracle_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mean_x = 0, mean_y = 0;
  for (double v : x) mean_x += v;
  mean_x /= n;
  for (double v : y) mean_y += v;
  mean_y /= n;
  double cov = 0;
  for (std::size_t i = 0; i < x.size(); ++i) cov += (x[i] - mean_x) * (y[i] - mean_y);
  double var_x = 0;
  for (double v : x) var_x += (v - mean_x) * (v - mean_x);
  double var_y = 0;
  for (double v : y) var_y += (v - mean_y) * (v - mean_y);
  return cov / (std::sqrt(var_x) * std::sqrt(var_y));
}

}  // namespace testsup
