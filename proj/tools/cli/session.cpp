#include "session.hpp"

#include <fstream>
#include <sstream>

#include "wildmoduli/errors.hpp"

#ifndef WILDMODULI_VERSION
#define WILDMODULI_VERSION "unknown"
#endif

namespace wildmoduli::cli {

Session::Session(RunConfig config) : config_(std::move(config)) {
  report_.command = config_.command;
  report_.seed = config_.seed;
  report_.version = WILDMODULI_VERSION;
}

double Session::tol(const std::string& name, double fallback) {
  double value = fallback;
  if (auto it = config_.tolerances.find(name); it != config_.tolerances.end()) {
    value = it->second;
  } else if (auto star = config_.tolerances.find("*"); star != config_.tolerances.end()) {
    value = star->second;
  }
  report_.tolerances[name] = value;
  return value;
}

json Session::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  input_bytes_ += bytes;
  input_bytes_.push_back('\0');
  config_.inputs.push_back(path);
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw InputError("", "'" + path + "' is not valid JSON");
  return j;
}

void Session::check(const std::string& name, double value, double threshold, Relation relation) {
  report_.checks.push_back({name, value, threshold, relation});
}

void Session::expect_equal(const std::string& name, long long value, long long expected) {
  check(name, static_cast<double>(value), static_cast<double>(expected), Relation::Equal);
}

void Session::finish(double wall_time_s) {
  // Paths are deliberately excluded: the digest identifies content, not location.
  report_.inputs_digest = "fnv1a64:" + fnv1a_hex(config_.command + '\0' + report_.parameters.dump() + '\0' +
                                                 input_bytes_);
  report_.seed = config_.seed;
  report_.wall_time_s = wall_time_s;
}

}  // namespace wildmoduli::cli
