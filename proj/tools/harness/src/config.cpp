#include "vmg_cli/config.hpp"

#include <charconv>
#include <cmath>

namespace vmg::cli {

namespace {

double parse_number(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first != last && *first == ' ') ++first;
  while (last != first && last[-1] == ' ') --last;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw UsageError("not a number: '" + s + "'");
  return v;
}

}  // namespace

void Config::validate() const {
  if (!(root_tol > 0.0)) throw UsageError("root-finding tolerance must be > 0");
  if (tolerance_override && !(*tolerance_override > 0.0)) throw UsageError("--tolerance must be > 0");
  if (quad_panels < 2 || quad_panels % 2 != 0) throw UsageError("--panels must be even and >= 2");
  if (quad_nodes < 1) throw UsageError("--nodes must be >= 1");
  if (series_n < 0 || series_n > kMaxSeriesOrder) {
    throw UsageError("series order must lie in [0, " + std::to_string(kMaxSeriesOrder) + "]");
  }
  if (grid_count < 2) throw UsageError("grid count must be >= 2");
  if (range) {
    const auto [a, b] = *range;
    if (!std::isfinite(a) || !std::isfinite(b)) throw UsageError("range bounds must be finite");
    if (!(a < b)) throw UsageError("empty range: need a < b");
  }
}

GridSpacing parse_spacing(const std::string& s) {
  if (s == "linear") return GridSpacing::Linear;
  if (s == "log") return GridSpacing::Log;
  throw UsageError("grid must be 'linear' or 'log', got '" + s + "'");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw UsageError("format must be 'csv' or 'json', got '" + s + "'");
}

std::pair<double, double> parse_range(const std::string& s) {
  const auto sep = s.find_first_of(",:");
  if (sep == std::string::npos) throw UsageError("range must look like 'a,b', got '" + s + "'");
  return {parse_number(s.substr(0, sep)), parse_number(s.substr(sep + 1))};
}

}  // namespace vmg::cli
