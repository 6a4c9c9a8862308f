#pragma once

#include <string>

#include "report.hpp"

namespace wildmoduli::cli {

/// State shared by one command invocation: resolves tolerances, loads inputs
/// and accumulates the report.
class Session {
 public:
  explicit Session(RunConfig config);

  const RunConfig& config() const noexcept { return config_; }
  Report& report() noexcept { return report_; }
  std::uint64_t seed() const noexcept { return config_.seed; }

  /// Tolerance `name`, honoring overrides; every value handed out is recorded.
  double tol(const std::string& name, double fallback);

  /// Reads a JSON input; its bytes feed the inputs digest.
  json load(const std::string& path);

  void check(const std::string& name, double value, double threshold, Relation relation = Relation::Below);
  /// Integer check that must hold exactly.
  void expect_equal(const std::string& name, long long value, long long expected);

  /// Fills the digest, seed, tolerances and version.
  void finish(double wall_time_s);

 private:
  RunConfig config_;
  Report report_;
  std::string input_bytes_;
};

}  // namespace wildmoduli::cli
