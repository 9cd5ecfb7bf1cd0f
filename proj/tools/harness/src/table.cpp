#include "vmg_cli/table.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

namespace vmg::cli {

namespace {

struct CsvCell {
  std::ostream& os;
  void operator()(double v) const { os << format_double(v); }
  void operator()(std::int64_t v) const { os << v; }
  void operator()(const std::string& v) const { os << v; }
};

nlohmann::json to_json(const Cell& c) {
  return std::visit([](const auto& v) -> nlohmann::json {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, double>) {
      if (!std::isfinite(v)) return format_double(v);
    }
    return v;
  }, c);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, res.ptr};
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(CsvCell{os}, row[i]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < t.header.size(); ++i) obj[t.header[i]] = to_json(row[i]);
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& t, OutputFormat f) {
  if (f == OutputFormat::Json) write_json(os, t);
  else write_csv(os, t);
}

}  // namespace vmg::cli
