#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "vmg_cli/config.hpp"

namespace vmg::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest-safe round trip: 17 significant digits, '.' decimal point
/// regardless of locale; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double v);

void write_csv(std::ostream& os, const Table& t);
/// JSON array of objects keyed by the header.
void write_json(std::ostream& os, const Table& t);
void write_table(std::ostream& os, const Table& t, OutputFormat f);

}  // namespace vmg::cli
