#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringtsp/graph.hpp"

namespace ringtsp {

struct InstanceDescriptor {
  std::string source;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  friend bool operator==(const InstanceDescriptor&, const InstanceDescriptor&) = default;
};

struct ReportResult {
  std::vector<Vertex> tour;
  std::vector<EdgeId> edges;
  double weight = 0.0;
  std::optional<double> optimum;
  std::optional<double> ratio;
  std::optional<bool> match;
  std::optional<std::string> oracle;
  std::optional<std::uint64_t> optimal_count;
  friend bool operator==(const ReportResult&, const ReportResult&) = default;
};

/// Outcome of one CLI run; the JSON form is the machine-readable output.
struct RunReport {
  std::string command;
  InstanceDescriptor instance;
  std::map<std::string, std::string> parameters;
  ReportResult result;
  double elapsed_ms = 0.0;
  nlohmann::json trace;  // null when absent
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

[[nodiscard]] nlohmann::json to_json(const RunReport& r);
/// Throws nlohmann::json::exception on malformed input.
[[nodiscard]] RunReport report_from_json(const nlohmann::json& j);

}  // namespace ringtsp
