#include "report.hpp"

#include <algorithm>
#include <cstdio>

namespace wildmoduli::cli {

namespace {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Below:
      return "<";
    case Relation::AtLeast:
      return ">=";
    case Relation::Equal:
      return "==";
  }
  return "?";
}

}  // namespace

bool Check::passed() const noexcept {
  switch (relation) {
    case Relation::Below:
      return value < threshold;
    case Relation::AtLeast:
      return value >= threshold;
    case Relation::Equal:
      return value == threshold;
  }
  return false;
}

bool Report::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

json Report::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name},
                  {"value", c.value},
                  {"relation", relation_name(c.relation)},
                  {"threshold", c.threshold},
                  {"passed", c.passed()}});
  }
  return {{"command", command},     {"inputs_digest", inputs_digest}, {"parameters", parameters},
          {"seed", seed},           {"tolerances", tolerances},       {"outputs", outputs},
          {"checks", cs},           {"passed", passed()},             {"wall_time_s", wall_time_s},
          {"version", version}};
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace wildmoduli::cli
