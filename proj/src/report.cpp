#include "windrisk/report.hpp"

#include "windrisk/clusters.hpp"
#include "windrisk/io.hpp"
#include "windrisk/stats.hpp"

namespace windrisk {

Report::Report(const RunConfig& config) {
  root_["schema"] = {{"name", "windrisk-report"}, {"version", 1}};
  root_["conventions"] = {
      {"boxplot", boxplot_convention()},
      {"cluster_estimators",
       {ClusterRiskProfile::window_estimator_name(),
        ClusterRiskProfile::run_estimator_name()}},
      {"uncertainty_mapping", "(1 - rho_low) * 100 percent"},
  };
  // Echo of the computation parameters. Output location is deliberately not
  // part of the echo: it does not affect any number in this file.
  nlohmann::ordered_json cfg;
  cfg["tower"] = config.tower;
  cfg["cut_in_ms"] = config.cut_in_ms;
  cfg["cut_out_ms"] = config.cut_out_ms;
  cfg["penetration"] = config.penetration;
  cfg["reserve_gwh"] = config.reserve_gwh;
  cfg["reference_p"] = config.reference_p;
  cfg["n_max"] = config.n_max;
  cfg["max_lag"] = config.max_lag;
  cfg["confidence"] = config.confidence;
  cfg["nameplate_gw"] = config.nameplate_gw;
  cfg["fast_fraction"] = config.fast_fraction;
  cfg["target_percent"] = config.target_percent;
  cfg["sweep_penetrations"] = config.sweep_penetrations;
  cfg["sweep_reserves_gwh"] = config.sweep_reserves_gwh;
  root_["config"] = std::move(cfg);
  root_["inputs"] = nlohmann::ordered_json::object();
}

void Report::add_input(const std::string& name, const std::string& path) {
  root_["inputs"][name] = {{"path", path}, {"fnv1a64", fnv1a64_hex(read_text_file(path))}};
}

nlohmann::ordered_json& Report::section(const std::string& name) {
  return root_[name];
}

std::string Report::serialize() const {
  return root_.dump(2) + "\n";
}

void emit_report(const Report& report, const std::string& path) {
  write_text_file(path, report.serialize());
}

}  // namespace windrisk
