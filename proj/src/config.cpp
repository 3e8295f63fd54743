#include "windrisk/config.hpp"

#include <cmath>
#include <filesystem>

#include <json.hpp>

#include "windrisk/io.hpp"

namespace windrisk {

namespace {

void require_file(const std::string& path, const char* what) {
  if (path.empty()) {
    throw InvalidParameterError(std::string(what) + " CSV path not set");
  }
  if (!std::filesystem::exists(path)) {
    throw IoError(std::string(what) + " CSV does not exist: " + path);
  }
}

void check_fraction(double v, const char* what) {
  if (!(v > 0.0) || !(v <= 1.0)) {
    throw InvalidParameterError(std::string(what) + " must lie in (0, 1]");
  }
}

}  // namespace

void RunConfig::validate(unsigned needs) const {
  if (needs & NeedWind) require_file(wind_csv, "wind");
  if (needs & NeedDemand) require_file(demand_csv, "demand");
  if (needs & NeedAnnual) require_file(annual_csv, "annual");

  if (!(cut_in_ms > 0.0) || !(cut_out_ms > cut_in_ms)) {
    throw InvalidParameterError("require 0 < cut-in < cut-out");
  }
  check_fraction(penetration, "penetration");
  check_fraction(reference_p, "reference penetration");
  check_fraction(fast_fraction, "fast-response fraction");
  if (!(reserve_gwh >= 0.0) || !std::isfinite(reserve_gwh)) {
    throw InvalidParameterError("reserve must be finite and >= 0");
  }
  if (n_max < 1) {
    throw InvalidParameterError("n_max must be >= 1");
  }
  if (max_lag < 1 || max_lag > 22) {
    throw InvalidParameterError("max lag must be in 1..22");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw InvalidParameterError("confidence must lie in (0, 1)");
  }
  if (!(nameplate_gw > 0.0)) {
    throw InvalidParameterError("nameplate must be positive");
  }
  if (!(target_percent > 0.0)) {
    throw InvalidParameterError("target percent must be positive");
  }
  for (double p : sweep_penetrations) check_fraction(p, "sweep penetration");
  for (double r : sweep_reserves_gwh) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw InvalidParameterError("sweep reserve must be finite and >= 0");
    }
  }
}

RunConfig load_config(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw CsvFormatError("config parse error in " + path + ": " + e.what());
  }

  RunConfig config;
  auto get = [](const nlohmann::json& obj, const char* key, auto& target) {
    if (obj.contains(key)) target = obj.at(key).get<std::decay_t<decltype(target)>>();
  };

  if (doc.contains("inputs")) {
    const auto& inputs = doc.at("inputs");
    get(inputs, "wind_csv", config.wind_csv);
    get(inputs, "tower", config.tower);
    get(inputs, "demand_csv", config.demand_csv);
    get(inputs, "annual_csv", config.annual_csv);
  }
  if (doc.contains("conversion")) {
    const auto& conv = doc.at("conversion");
    get(conv, "cut_in_ms", config.cut_in_ms);
    get(conv, "cut_out_ms", config.cut_out_ms);
  }
  if (doc.contains("scenario")) {
    const auto& s = doc.at("scenario");
    get(s, "penetration", config.penetration);
    get(s, "reserve_gwh", config.reserve_gwh);
    get(s, "reference_p", config.reference_p);
  }
  if (doc.contains("clusters")) {
    get(doc.at("clusters"), "n_max", config.n_max);
  }
  if (doc.contains("acf")) {
    const auto& a = doc.at("acf");
    get(a, "max_lag", config.max_lag);
    get(a, "confidence", config.confidence);
  }
  if (doc.contains("fleet")) {
    const auto& f = doc.at("fleet");
    get(f, "nameplate_gw", config.nameplate_gw);
    get(f, "fast_fraction", config.fast_fraction);
  }
  if (doc.contains("growth")) {
    get(doc.at("growth"), "target_percent", config.target_percent);
  }
  if (doc.contains("sweep")) {
    const auto& s = doc.at("sweep");
    get(s, "penetrations", config.sweep_penetrations);
    get(s, "reserves_gwh", config.sweep_reserves_gwh);
  }
  if (doc.contains("output")) {
    const auto& o = doc.at("output");
    get(o, "dir", config.out_dir);
    get(o, "plots", config.plots);
  }
  return config;
}

void apply_default_sweep_grid(RunConfig& config) {
  if (config.sweep_penetrations.empty()) {
    for (int i = 1; i <= 15; ++i) {
      config.sweep_penetrations.push_back(static_cast<double>(i) / 100.0);
    }
  }
  if (config.sweep_reserves_gwh.empty()) {
    config.sweep_reserves_gwh = {2.5, 5.0};
  }
}

}  // namespace windrisk
