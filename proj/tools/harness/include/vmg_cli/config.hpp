#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "vmg/density.hpp"
#include "vmg/real_analysis.hpp"

namespace vmg::cli {

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxSeriesOrder = 200;

enum class GridSpacing { Linear, Log };
enum class OutputFormat { Csv, Json };

struct Config {
  double root_tol = kT0InvTolerance;
  int quad_panels = kDefaultPanels;
  int quad_nodes = kDefaultNodes;
  int series_n = 120;
  int grid_count = 2001;
  std::optional<std::pair<double, double>> range;  ///< default (-edge, edge)
  GridSpacing spacing = GridSpacing::Linear;
  OutputFormat format = OutputFormat::Csv;
  std::optional<double> tolerance_override;

  /// Throws UsageError on the first violated constraint.
  void validate() const;
};

GridSpacing parse_spacing(const std::string& s);
OutputFormat parse_format(const std::string& s);
/// "a,b" or "a:b".
std::pair<double, double> parse_range(const std::string& s);

}  // namespace vmg::cli
