#pragma once

// Density of the measure on its support [-edge, edge].
//
// Off the special points, rho(x) = Im F(x) / (pi |F(x)|^2) with F the boundary
// value of the reciprocal transform, extended evenly. The same values are also
// produced parametrically: along eta = -pi (INNER, x in (0, sqrt2)) and
// eta = 0 (OUTER, x in (sqrt2, edge)) every xi gives x = W^{-1}(H(eta, xi)) and
// F(x) = x g(eta, xi), with no root finding.

#include <span>
#include <string_view>
#include <vector>

namespace vmg {

enum class DensityMethod { Direct, Parametric, Special };

std::string_view to_string(DensityMethod m) noexcept;

struct DensitySample {
  double x = 0.0;
  double rho = 0.0;
  DensityMethod method = DensityMethod::Direct;
};

struct SupportInfo {
  double edge;                           ///< sqrt(2 + gamma0)
  std::vector<double> special_points;    ///< -edge, -sqrt2, 0, sqrt2, edge
};

SupportInfo support_info();

/// rho(0) = (sqrt2 / 2pi) e^{sqrt3 pi/9} and rho(+-sqrt2) = sqrt6 / (4pi)
/// (both tagged Special; the second within kSqrt2Snap), 0 for |x| >= edge,
/// the boundary formula elsewhere. Computed from |x|, so exactly even.
DensitySample rho_direct(double x);

enum class ParametricBranch { Inner, Outer };

/// INNER needs each xi < pi, OUTER each xi < 0. Throws DomainError otherwise,
/// and ConsistencyError if W^{-1}(H(eta, xi)) leaves the real axis by more
/// than 1e-8 (1 + |x|).
std::vector<DensitySample> rho_parametric(ParametricBranch branch, std::span<const double> xi_grid);

inline constexpr int kDefaultPanels = 64;
inline constexpr int kDefaultNodes = 32;

/// 2 int_0^edge x^k rho(x) dx after x = edge sin(theta), which removes the
/// inverse square root at the edge. Half of the panels cover [0, sqrt2] and
/// half [sqrt2, edge]; each carries a `nodes`-point Gauss-Legendre rule.
/// k even in [0, 12]; panels even and >= 2.
double quad_moment(int k, int panels = kDefaultPanels, int nodes = kDefaultNodes);

/// -(1/pi) Im G(x + i eps); tends to rho(x) as eps -> 0. |x| < edge, eps > 0.
double stieltjes_check(double x, double eps);

/// rho(edge - delta) sqrt(edge^2 - (edge - delta)^2) for each delta in (0, 0.1).
std::vector<double> edge_ratio(std::span<const double> deltas);

}  // namespace vmg
