#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace wildmoduli::cli {

using nlohmann::json;

/// What the user asked for. Seed and tolerances are always echoed in the report.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t seed = 1;
  /// name -> value overrides; "*" applies to every tolerance without its own entry.
  std::map<std::string, double> tolerances;
  std::optional<std::string> out;
  std::optional<std::string> report;
};

enum class Relation { Below, AtLeast, Equal };

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Relation relation = Relation::Below;

  bool passed() const noexcept;
};

struct Report {
  std::string command;
  std::string inputs_digest;
  json parameters = json::object();
  json outputs = json::object();
  std::vector<Check> checks;
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
  std::string version;

  bool passed() const noexcept;
  json to_json() const;
};

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace wildmoduli::cli
