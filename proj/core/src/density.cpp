#include "vmg/density.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "vmg/errors.hpp"
#include "vmg/geometry.hpp"
#include "vmg/quadrature.hpp"
#include "vmg/transform.hpp"

namespace vmg {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

double rho_from_f(PlanePoint f) { return f.imag() / (pi * std::norm(f)); }

}  // namespace

std::string_view to_string(DensityMethod m) noexcept {
  switch (m) {
    case DensityMethod::Direct: return "DIRECT";
    case DensityMethod::Parametric: return "PARAMETRIC";
    case DensityMethod::Special: return "SPECIAL";
  }
  return "DIRECT";
}

SupportInfo support_info() {
  const double e = constants().edge;
  return {e, {-e, -sqrt2, 0.0, sqrt2, e}};
}

DensitySample rho_direct(double x) {
  const double ax = std::abs(x);
  const Constants& c = constants();
  if (ax == 0.0) return {x, sqrt2 / (2.0 * pi) * std::exp(c.t_max), DensityMethod::Special};
  if (std::abs(ax - sqrt2) <= kSqrt2Snap) return {x, std::sqrt(6.0) / (4.0 * pi), DensityMethod::Special};
  if (!(ax < c.edge)) return {x, 0.0, DensityMethod::Direct};
  return {x, rho_from_f(F_mu(ax)), DensityMethod::Direct};
}

std::vector<DensitySample> rho_parametric(ParametricBranch branch, std::span<const double> xi_grid) {
  const double eta = branch == ParametricBranch::Inner ? -pi : 0.0;
  std::vector<DensitySample> out;
  out.reserve(xi_grid.size());
  for (double xi : xi_grid) {
    if (!(xi < -eta)) {
      throw DomainError("rho_parametric: xi must be below " + std::to_string(-eta) + ", got " +
                        std::to_string(xi));
    }
    const PlanePoint z = w1_inv(H_exact({eta, xi}));
    if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z))) {
      throw ConsistencyError("rho_parametric: W^{-1}(H) is not real at xi = " + std::to_string(xi) +
                             " (Im = " + std::to_string(z.imag()) + ")");
    }
    const double x = z.real();
    out.push_back({x, rho_from_f(x * g_map({eta, xi})), DensityMethod::Parametric});
  }
  return out;
}

double quad_moment(int k, int panels, int nodes) {
  if (k < 0 || k > 12 || k % 2 != 0) {
    throw DomainError("quad_moment: k must be even in [0, 12], got " + std::to_string(k));
  }
  if (panels < 2 || panels % 2 != 0) {
    throw DomainError("quad_moment: panel count must be even and >= 2, got " + std::to_string(panels));
  }
  const double edge = constants().edge;
  const GaussLegendreRule rule = gauss_legendre(nodes);
  const double theta_split = std::asin(sqrt2 / edge);
  const int half = panels / 2;

  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(panels) * rule.nodes.size());
  for (const auto& [a, b] : {std::pair{0.0, theta_split}, std::pair{theta_split, 0.5 * pi}}) {
    const double width = (b - a) / half;
    for (int p = 0; p < half; ++p) {
      const double lo = a + p * width;
      const double mid = lo + 0.5 * width;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = mid + 0.5 * width * rule.nodes[i];
        const double x = edge * std::sin(theta);
        const double jac = edge * std::cos(theta);
        terms.push_back(0.5 * width * rule.weights[i] * std::pow(x, k) * rho_direct(x).rho * jac);
      }
    }
  }
  return 2.0 * pairwise_sum(terms);
}

double stieltjes_check(double x, double eps) {
  if (!(std::abs(x) < constants().edge)) throw DomainError("stieltjes_check: need |x| < edge");
  if (!(eps > 0.0)) throw DomainError("stieltjes_check: need eps > 0");
  return -G_mu({x, eps}).imag() / pi;
}

std::vector<double> edge_ratio(std::span<const double> deltas) {
  const double edge = constants().edge;
  std::vector<double> out;
  out.reserve(deltas.size());
  for (double d : deltas) {
    if (!(d > 0.0 && d < 0.1)) throw DomainError("edge_ratio: delta must lie in (0, 0.1)");
    out.push_back(rho_direct(edge - d).rho * std::sqrt(d * (2.0 * edge - d)));
  }
  return out;
}

}  // namespace vmg
