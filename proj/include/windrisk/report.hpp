#pragma once

#include <string>

#include <json.hpp>

#include "windrisk/config.hpp"

namespace windrisk {

/// Versioned structured result file. Sections are added by the CLI as it
/// computes; the serialized form is fully deterministic (ordered keys, no
/// timestamps), so identical inputs give byte-identical reports.
class Report {
 public:
  explicit Report(const RunConfig& config);

  /// Records an input file's path and content fingerprint.
  void add_input(const std::string& name, const std::string& path);

  nlohmann::ordered_json& section(const std::string& name);

  std::string serialize() const;

 private:
  nlohmann::ordered_json root_;
};

void emit_report(const Report& report, const std::string& path);

}  // namespace windrisk
