#include "vmg_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "vmg/density.hpp"
#include "vmg/geometry.hpp"
#include "vmg/moments.hpp"
#include "vmg/transform.hpp"
#include "vmg_cli/commands.hpp"

namespace vmg::cli {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;
using Clock = std::chrono::steady_clock;

// Reference decimals, 50-digit evaluations of the closed forms.
constexpr double kEdge = 1.688423423005195278;
constexpr double kG0Im = -1.2943727278954531871;
constexpr double kGSqrt2Re = 0.35355339059327376220;
constexpr double kGSqrt2Im = -0.61237243569579452455;
constexpr double kRho0 = 0.41201163569580435686;
constexpr double kRhoSqrt2 = 0.19492420030841902698;

class Sink {
 public:
  Sink(const Config& cfg, std::vector<Check>& out) : cfg_(cfg), out_(out) {}

  void tolerance(std::string name, double value, double target, double tol, std::string detail = {}) {
    const double t = cfg_.tolerance_override.value_or(tol);
    push({std::move(name), CheckKind::Tolerance, value, target, t, std::move(detail),
          std::abs(value - target) <= t});
  }
  void at_most(std::string name, double value, double bound, std::string detail = {}) {
    push({std::move(name), CheckKind::AtMost, value, bound, std::nullopt, std::move(detail), value <= bound});
  }
  void exact(std::string name, double value, double target, std::string detail = {}) {
    push({std::move(name), CheckKind::Exact, value, target, std::nullopt, std::move(detail), value == target});
  }

 private:
  void push(Check c) { out_.push_back(std::move(c)); }
  const Config& cfg_;
  std::vector<Check>& out_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<double> open_grid(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * (i + 1) / (n + 1));
  return out;
}

std::vector<double> closed_grid(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
  return out;
}

void check_moments(const Config&, Sink& s) {
  const auto t0 = Clock::now();
  const MomentTable m = moments(12);
  const double elapsed = seconds_since(t0);
  s.exact("moments.m2", m[2] == 1 ? 1.0 : 0.0, 1.0, "m_2 = " + to_fraction_string(m[2]));
  s.exact("moments.m4", m[4] == 2 ? 1.0 : 0.0, 1.0, "m_4 = " + to_fraction_string(m[4]));
  s.exact("moments.m6", m[6] == Rational(14, 3) ? 1.0 : 0.0, 1.0, "m_6 = " + to_fraction_string(m[6]));

  const MomentTable big = moments(40);
  int odd_nonzero = 0;
  for (unsigned n = 1; n <= big.max_order(); n += 2) odd_nonzero += big[n] != 0;
  s.exact("moments.odd_zero", odd_nonzero, 0.0, "count of nonzero odd moments up to n = 40");

  const std::vector<BigInt> cat = catalan_table(20);
  int above = 0;
  for (unsigned k = 0; k <= 20; ++k) above += big[2 * k] > cat[k];
  s.exact("moments.catalan_bound", above, 0.0, "count of k <= 20 with m_2k > C_k");
  s.at_most("moments.runtime_s", elapsed, 1.0, "moments(12) wall time");
}

void check_mgf(const Config& cfg, Sink& s) {
  const MomentTable m = moments(static_cast<unsigned>(cfg.series_n));
  double worst = 0.0;
  for (double x : {0.1, 0.2, 0.3, 0.4}) {
    worst = std::max(worst, std::abs(mgf_partial(m, x, m.max_order()) - mgf_closed(x, cfg.root_tol)));
  }
  s.tolerance("mgf.series_vs_closed", worst, 0.0, 1e-8, "max over x in {0.1, 0.2, 0.3, 0.4}");
}

void check_constants(const Config&, Sink& s) {
  const Constants& c = constants();
  s.tolerance("constants.gamma0_identity", 0.5 * std::log1p(2.0 / c.gamma0), c.t_max, 1e-15,
              "(1/2) ln(1 + 2/gamma0) vs sqrt(3)pi/9");
  s.tolerance("constants.edge", c.edge, kEdge, 1e-6, "sqrt(2 + gamma0)");
}

void check_roundtrip(const Config&, Sink& s) {
  double worst = 0.0;
  for (double im : closed_grid(-0.5 * pi, 0.0, 10)) {
    for (double re : closed_grid(-3.0, 3.0, 10)) {
      const PlanePoint w{re, im};
      worst = std::max(worst, std::abs(T_of(t_inv(w)) - w));
    }
  }
  s.tolerance("roundtrip.T_of_t_inv", worst, 0.0, 1e-10, "100 points of D, both branches");

  worst = 0.0;
  for (double eta : closed_grid(-pi, 0.0, 20)) {
    for (double d : closed_grid(0.05, 8.0, 20)) {
      const PlanePoint u = g_map({eta, -eta - d});
      worst = std::max(worst, std::abs(t_inv(T_of(u)) - u));
    }
  }
  for (double x : closed_grid(0.0, 5.0, 51)) worst = std::max(worst, std::abs(t_inv(T_of(x)) - x));
  s.tolerance("roundtrip.t_inv_T_of", worst, 0.0, 1e-9, "20x20 Theta-image grid and real u in [0, 5]");

  worst = 0.0;
  for (double r : closed_grid(0.1, 5.0, 10)) {
    for (double phi : closed_grid(0.0, 0.5 * pi, 10)) {
      const PlanePoint z = std::polar(r, phi);
      worst = std::max(worst, std::abs(w1_inv(w_complex(z)) - z));
    }
  }
  s.tolerance("roundtrip.w1_inv_w_complex", worst, 0.0, 1e-10, "100 points of closure(Q)");
}

void check_levelset(const Config&, Sink& s) {
  double worst = 0.0;
  for (double eta : closed_grid(-pi, 0.0, 60)) {
    for (double d : closed_grid(1e-3, 20.0, 60)) {
      worst = std::max(worst, std::abs(H_exact({eta, -eta - d}).imag() - 0.5 * eta));
    }
  }
  s.tolerance("levelset.im_H", worst, 0.0, 1e-12, "60x60 Theta grid");

  int violations = 0;
  for (double eta : {0.0, -0.25 * pi, -0.5 * pi, -0.75 * pi, -pi}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double xi : open_grid(-20.0, -eta, 200)) {
      const double re = H_exact({eta, xi}).real();
      violations += !(re < prev);
      prev = re;
    }
  }
  s.exact("levelset.re_H_decreasing", violations, 0.0, "non-decreasing steps over 5 x 200 points");
}

void check_branch(const Config&, Sink& s) {
  for (double sv : {0.5, 1.0, 2.0}) {
    const std::string tag = "s=" + format_double(sv);
    std::vector<double> err;
    for (double h : {1e-2, 1e-3, 1e-4}) {
      const double eta = -h;
      const double xi = -h * (1.0 / sv - 1.0);
      err.push_back(std::abs(H_exact({eta, xi}) - PlanePoint{t0(sv), 0.0}));
    }
    const bool decreasing = err[1] < err[0] && err[2] < err[1];
    s.exact("branch.decreasing." + tag, decreasing ? 1.0 : 0.0, 1.0,
            "|H - T0(s)| at |eta| = 1e-2, 1e-3, 1e-4: " + format_double(err[0]) + ", " +
                format_double(err[1]) + ", " + format_double(err[2]));
    s.tolerance("branch.limit." + tag, err[2], 0.0, 1e-3, "|H - T0(s)| at |eta| = 1e-4");

    // g(-h, -h c) -> 1 / (2 (1 + c)), so u -> s needs xi / eta = 1/(2s) - 1.
    const double h = 1e-4;
    const double c = 1.0 / (2.0 * sv) - 1.0;
    s.tolerance("branch.limit_half_slope." + tag, std::abs(H_exact({-h, -h * c}) - PlanePoint{t0(sv), 0.0}),
                0.0, 1e-3, "|H - T0(s)| along xi/eta = 1/(2s) - 1 at |eta| = 1e-4");
  }
}

void check_quadrature(const Config& cfg, Sink& s) {
  const auto t0 = Clock::now();
  const std::pair<int, double> targets[] = {{0, 1.0}, {2, 1.0}, {4, 2.0}, {6, 14.0 / 3.0}};
  const double tols[] = {1e-6, 1e-6, 1e-5, 1e-4};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [k, target] = targets[i];
    s.tolerance("quadrature.m" + std::to_string(k), quad_moment(k, cfg.quad_panels, cfg.quad_nodes), target,
                tols[i], "2 int_0^edge x^k rho");
  }
  s.at_most("quadrature.runtime_s", seconds_since(t0), 30.0, "four quadrature moments, wall time");
}

void check_boundary(const Config&, Sink& s) {
  const PlanePoint g0 = G_mu(0.0);
  s.tolerance("boundary.G0.re", g0.real(), 0.0, 1e-6, "G(0) special value");
  s.tolerance("boundary.G0.im", g0.imag(), kG0Im, 1e-6, "G(0) special value");
  const PlanePoint g0_lim = G_mu({0.0, 1e-9});
  s.tolerance("boundary.G0_limit.im", g0_lim.imag(), kG0Im, 1e-6, "G(1e-9 i)");
  const PlanePoint gs = G_mu(sqrt2);
  s.tolerance("boundary.Gsqrt2.re", gs.real(), kGSqrt2Re, 1e-6, "G(sqrt2) special value");
  s.tolerance("boundary.Gsqrt2.im", gs.imag(), kGSqrt2Im, 1e-6, "G(sqrt2) special value");
  const PlanePoint gs_lim = G_mu({sqrt2, 1e-9});
  s.tolerance("boundary.Gsqrt2_limit.re", gs_lim.real(), kGSqrt2Re, 1e-6, "G(sqrt2 + 1e-9 i)");
  s.tolerance("boundary.Gsqrt2_limit.im", gs_lim.imag(), kGSqrt2Im, 1e-6, "G(sqrt2 + 1e-9 i)");
}

void check_stieltjes(const Config&, Sink& s) {
  double worst = 0.0;
  for (double x : open_grid(-1.65, 1.65, 50)) {
    worst = std::max(worst, std::abs(rho_direct(x).rho - stieltjes_check(x, 1e-7)));
  }
  s.tolerance("stieltjes.max_residual", worst, 0.0, 1e-4, "50 points in (-1.65, 1.65), eps = 1e-7");
}

void check_density(const Config& cfg, Sink& s) {
  s.tolerance("density.rho0", rho_direct(0.0).rho, kRho0, 1e-12, "(sqrt2 / 2pi) e^{sqrt3 pi/9}");
  s.tolerance("density.rho_sqrt2", rho_direct(sqrt2).rho, kRhoSqrt2, 1e-12, "sqrt6 / 4pi");

  double worst = 0.0;
  const std::vector<double> inner = closed_grid(-12.0, 3.1, 200);
  // Closer to the edge than ~1e-7 the rounding of x alone moves rho by more
  // than 1e-8 relative (rho ~ 1/sqrt(edge - x)).
  const std::vector<double> outer = closed_grid(-12.0, -1e-3, 200);
  for (const auto& [branch, xi] : {std::pair{ParametricBranch::Inner, inner}, std::pair{ParametricBranch::Outer, outer}}) {
    for (const DensitySample& p : rho_parametric(branch, xi)) {
      worst = std::max(worst, std::abs(rho_direct(p.x).rho - p.rho) / (1.0 + p.rho));
    }
  }
  s.tolerance("density.parametric_vs_direct", worst, 0.0, 1e-8, "relative to 1 + rho, 400 parametric samples");

  Config grid_cfg = cfg;
  grid_cfg.range.reset();
  grid_cfg.spacing = GridSpacing::Linear;
  double asym = 0.0;
  double min_rho = std::numeric_limits<double>::infinity();
  for (double x : density_grid(grid_cfg)) {
    const double r = rho_direct(x).rho;
    asym = std::max(asym, std::abs(r - rho_direct(-x).rho));
    min_rho = std::min(min_rho, r);
  }
  s.exact("density.evenness", asym, 0.0, "max |rho(x) - rho(-x)| on the density grid");
  s.exact("density.nonnegative", min_rho >= 0.0 ? 1.0 : 0.0, 1.0, "min rho = " + format_double(min_rho));
}

void check_transform(const Config&, Sink& s) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> re_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> log_im(-3.0, 0.5);
  double max_im = -std::numeric_limits<double>::infinity();
  double reflect = 0.0;
  for (int i = 0; i < 200; ++i) {
    const PlanePoint z{re_dist(rng), std::pow(10.0, log_im(rng))};
    const PlanePoint g = G_mu(z);
    max_im = std::max(max_im, g.imag());
    if (i < 50) reflect = std::max(reflect, std::abs(G_mu(-std::conj(z)) + std::conj(g)));
  }
  s.exact("transform.nevanlinna", max_im < 0.0 ? 1.0 : 0.0, 1.0, "max Im G over 200 points = " + format_double(max_im));
  const PlanePoint z100{0.0, 100.0};
  s.tolerance("transform.large_z", std::abs(z100 * G_mu(z100) - 1.0), 0.0, 2e-4, "|100i G(100i) - 1|");
  s.tolerance("transform.reflection", reflect, 0.0, 1e-12, "max |G(-conj z) + conj G(z)| over 50 points");
}

void check_edge(const Config&, Sink& s) {
  const double deltas[] = {1e-4, 5e-5, 2.5e-5};
  const std::vector<double> r = edge_ratio(deltas);
  const double spread = std::max(std::abs(r[0] / r[1] - 1.0), std::abs(r[1] / r[2] - 1.0));
  s.tolerance("edge.ratio_stability", spread, 0.0, 0.05,
              "ratios " + format_double(r[0]) + ", " + format_double(r[1]) + ", " + format_double(r[2]));
}

using GroupFn = std::function<void(const Config&, Sink&)>;

const std::vector<std::pair<std::string, GroupFn>>& groups() {
  static const std::vector<std::pair<std::string, GroupFn>> g = {
      {"moments", check_moments},       {"mgf", check_mgf},
      {"constants", check_constants},   {"roundtrip", check_roundtrip},
      {"levelset", check_levelset},     {"branch", check_branch},
      {"quadrature", check_quadrature}, {"boundary", check_boundary},
      {"stieltjes", check_stieltjes},   {"density", check_density},
      {"transform", check_transform},   {"edge", check_edge},
  };
  return g;
}

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::Tolerance: return "tolerance";
    case CheckKind::AtMost: return "at_most";
    case CheckKind::Exact: return "exact";
  }
  return "tolerance";
}

}  // namespace

bool VerifyReport::all_pass() const noexcept { return failures() == 0; }

std::size_t VerifyReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : groups()) v.push_back(name);
    return v;
  }();
  return names;
}

VerifyReport run_verify(const Config& cfg, const std::string& only) {
  cfg.validate();
  VerifyReport report;
  Sink sink(cfg, report.checks);
  bool matched = false;
  for (const auto& [name, fn] : groups()) {
    if (!only.empty() && name.rfind(only, 0) != 0) continue;
    matched = true;
    try {
      fn(cfg, sink);
    } catch (const std::exception& e) {
      report.checks.push_back({name + ".error", CheckKind::Exact, 1.0, 0.0, std::nullopt, e.what(), false});
    }
  }
  if (!matched) throw UsageError("--only '" + only + "' matches no check group");
  return report;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) {
    nlohmann::json j{{"name", c.name},   {"kind", kind_name(c.kind)}, {"value", c.value},
                     {"target", c.target}, {"pass", c.pass}};
    j["tolerance"] = c.tolerance ? nlohmann::json(*c.tolerance) : nlohmann::json(nullptr);
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return {{"checks", checks},
          {"total", r.checks.size()},
          {"failed", r.failures()},
          {"ok", r.all_pass()}};
}

}  // namespace vmg::cli
