#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vmg_cli/config.hpp"

namespace vmg::cli {

enum class CheckKind {
  Tolerance,  ///< |value - target| <= tolerance; --tolerance overrides it
  AtMost,     ///< value <= target (runtime budgets, Catalan bound)
  Exact,      ///< value == target
};

struct Check {
  std::string name;  ///< "<group>.<detail>"
  CheckKind kind = CheckKind::Tolerance;
  double value = 0.0;
  double target = 0.0;
  std::optional<double> tolerance;
  std::string detail;
  bool pass = false;
};

struct VerifyReport {
  std::vector<Check> checks;
  [[nodiscard]] bool all_pass() const noexcept;
  [[nodiscard]] std::size_t failures() const noexcept;
};

/// Check groups, one per acceptance criterion, in order.
const std::vector<std::string>& check_groups();

/// Runs every group whose name starts with `only` (all if empty). Throws
/// UsageError if `only` matches no group.
VerifyReport run_verify(const Config& cfg, const std::string& only = {});

nlohmann::json to_json(const VerifyReport& r);

}  // namespace vmg::cli
