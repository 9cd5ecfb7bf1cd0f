#include "vmg_cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "vmg/errors.hpp"
#include "vmg/geometry.hpp"
#include "vmg/moments.hpp"
#include "vmg/transform.hpp"

namespace vmg::cli {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

constexpr double kLogGridClosest = 1e-9;

std::vector<double> linspace_open(double a, double b, int n) {
  // mid + half * k / (n + 1) with k odd/even integers symmetric about 0,
  // so a symmetric range gives an exactly symmetric grid.
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double k = 2.0 * (i + 1) - (n + 1);
    out[static_cast<std::size_t>(i)] = mid + half * k / (n + 1);
  }
  return out;
}

std::vector<double> linspace_closed(double a, double b, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  out.back() = b;
  return out;
}

/// Distances closest..extent (exclusive of extent) on a geometric scale.
std::vector<double> log_distances(double extent, int n) {
  std::vector<double> out;
  if (n <= 0) return out;
  const double lo = std::log10(kLogGridClosest);
  const double hi = std::log10(extent);
  for (int j = 0; j < n; ++j) out.push_back(std::pow(10.0, lo + (hi - lo) * j / n));
  return out;
}

Table density_rows(const std::vector<DensitySample>& samples) {
  Table t{{"x", "rho", "method"}, {}};
  t.rows.reserve(samples.size());
  for (const auto& s : samples) t.rows.push_back({s.x, s.rho, std::string(to_string(s.method))});
  return t;
}

double parse_field(const std::string& field, std::size_t line) {
  const char* first = field.data();
  const char* last = first + field.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) --last;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw UsageError("line " + std::to_string(line) + ": malformed number '" + field + "'");
  }
  return v;
}

}  // namespace

Table constants_table() {
  const Constants& c = constants();
  Table t{{"name", "value"}, {}};
  const std::pair<const char*, double> rows[] = {
      {"t_max", c.t_max},
      {"gamma0", c.gamma0},
      {"edge", c.edge},
      {"inv_edge", 1.0 / c.edge},
      {"u0_re", c.u0.real()},
      {"u0_im", c.u0.imag()},
      {"alpha", c.alpha},
      {"beta_re", c.beta.real()},
      {"beta_im", c.beta.imag()},
      {"rho_at_0", rho_direct(0.0).rho},
      {"rho_at_sqrt2", rho_direct(sqrt2).rho},
      {"G_at_0_im", G_mu(0.0).imag()},
  };
  for (const auto& [name, v] : rows) t.rows.push_back({std::string(name), v});
  return t;
}

Table moments_table(int n) {
  if (n < 0 || n > kMaxSeriesOrder) {
    throw UsageError("N must lie in [0, " + std::to_string(kMaxSeriesOrder) + "], got " + std::to_string(n));
  }
  const MomentTable m = moments(static_cast<unsigned>(n));
  Table t{{"n", "moment"}, {}};
  for (int i = 0; i <= n; ++i) t.rows.push_back({std::int64_t{i}, to_fraction_string(m[static_cast<std::size_t>(i)])});
  return t;
}

std::vector<double> density_grid(const Config& cfg) {
  cfg.validate();
  const double edge = constants().edge;
  const auto [a, b] = cfg.range.value_or(std::pair{-edge, edge});
  if (cfg.spacing == GridSpacing::Linear) return linspace_open(a, b, cfg.grid_count);

  if (!(a < sqrt2 && sqrt2 < b)) throw UsageError("log grid needs sqrt(2) strictly inside the range");
  const int n_left = cfg.grid_count / 2;
  const int n_right = cfg.grid_count - n_left;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(cfg.grid_count));
  const std::vector<double> left = log_distances(sqrt2 - a, n_left);
  for (auto it = left.rbegin(); it != left.rend(); ++it) out.push_back(sqrt2 - *it);
  for (double d : log_distances(b - sqrt2, n_right)) out.push_back(sqrt2 + d);
  return out;
}

Table density_table(const Config& cfg) {
  std::vector<DensitySample> samples;
  for (double x : density_grid(cfg)) samples.push_back(rho_direct(x));
  return density_rows(samples);
}

Table parametric_table(const Config& cfg, const ParametricOptions& opt) {
  cfg.validate();
  const bool inner = opt.branch == ParametricBranch::Inner;
  const double lo = opt.xi_min.value_or(-12.0);
  const double hi = opt.xi_max.value_or(inner ? 3.1 : -1e-6);
  const double bound = inner ? pi : 0.0;
  if (!(lo < hi)) throw UsageError("empty xi range: need xi-min < xi-max");
  if (!(hi < bound)) throw UsageError("xi-max must be below " + format_double(bound) + " for this branch");
  const std::vector<double> xi = linspace_closed(lo, hi, cfg.grid_count);
  return density_rows(rho_parametric(opt.branch, xi));
}

Table curve_table(const Config& cfg, const CurveOptions& opt) {
  cfg.validate();
  if (!(opt.eta >= -pi && opt.eta <= 0.0)) throw UsageError("eta must lie in [-pi, 0]");
  const double hi = opt.xi_max.value_or(-opt.eta - 1e-3);
  if (!(opt.xi_min < hi)) throw UsageError("empty xi range: need xi-min < xi-max");
  if (!(hi < -opt.eta)) throw UsageError("xi-max must be below -eta");
  const std::vector<double> xi = linspace_closed(opt.xi_min, hi, cfg.grid_count);
  const std::vector<PlanePoint> pts = gamma_curve(opt.eta, xi);
  Table t{{"xi", "re", "im"}, {}};
  for (std::size_t i = 0; i < xi.size(); ++i) t.rows.push_back({xi[i], pts[i].real(), pts[i].imag()});
  return t;
}

Table transform_table(std::istream& in) {
  Table t{{"re", "im", "F_re", "F_im", "G_re", "G_im"}, {}};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw UsageError("line " + std::to_string(lineno) + ": expected 're,im', got '" + line + "'");
    }
    const PlanePoint z{parse_field(line.substr(0, comma), lineno), parse_field(line.substr(comma + 1), lineno)};
    try {
      const TransformValue v = evaluate_transform(z);
      const double inf = std::numeric_limits<double>::infinity();
      const PlanePoint g = v.G.value_or(PlanePoint{inf, inf});
      t.rows.push_back({z.real(), z.imag(), v.F.real(), v.F.imag(), g.real(), g.imag()});
    } catch (const DomainError& e) {
      throw UsageError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return t;
}

}  // namespace vmg::cli
