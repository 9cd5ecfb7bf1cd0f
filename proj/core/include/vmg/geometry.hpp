#pragma once

// Coordinates on the upper half-plane minus u0.
//
// A point (eta, xi) of the parameter strip Xi maps to
//
//   v = h(eta, xi) = exp(-sqrt(3)(eta + xi) + i xi)      (|v| > 1)
//   u = f0(v)      = sqrt(3) i (v - 1) / (1 - |v|^2) + u0
//
// and g = f0 o h. For fixed eta the image of xi < -eta is the curve Gamma_eta;
// Im T is constant (= eta / 2) along it. The trapezoid
// Theta = { -pi <= eta <= 0, xi < -eta } is mapped onto the closure of the
// domain Delta of T, minus [0, inf) and u0.

#include <span>
#include <string_view>
#include <vector>

#include "vmg/real_analysis.hpp"

namespace vmg {

struct ParamPoint {
  double eta = 0.0;
  double xi = 0.0;
  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

enum class Region {
  ThetaInterior,  ///< -pi < eta < 0, xi < -eta
  ThetaBoundary,  ///< eta in {-pi, 0}, xi < -eta
  Xi,             ///< in Xi but not in Theta
  Delta,          ///< u in the open set Delta = g(interior of Theta)
  DStrip,         ///< w in D \ L
  LRay,           ///< w in L = (-inf, sqrt(3)pi/9]
  QQuad,          ///< z in the open first quadrant
  Outside,
};

std::string_view to_string(Region r) noexcept;

/// Position of a parameter point relative to Theta.
enum class ThetaSide { Interior, Top /* eta = 0 */, Bottom /* eta = -pi */, Outside };

ThetaSide classify_theta(ParamPoint p) noexcept;

// Membership tests. Comparisons are exact IEEE comparisons against the
// closed/open inequalities of each set, with no tolerance.
bool in_theta(ParamPoint p) noexcept;  ///< -pi <= eta <= 0 and xi < -eta
bool in_xi(ParamPoint p) noexcept;     ///< -3pi/2 < eta <= pi/2 and xi < -eta
bool in_D(PlanePoint w) noexcept;      ///< -pi/2 <= Im w <= 0
bool in_L(PlanePoint w) noexcept;      ///< Im w == 0 and Re w <= sqrt(3)pi/9
bool in_Q(PlanePoint z) noexcept;      ///< Re z > 0 and Im z > 0

/// ThetaInterior / ThetaBoundary / Xi / Outside.
Region param_region(ParamPoint p) noexcept;
/// LRay / DStrip / Outside.
Region strip_region(PlanePoint w) noexcept;
/// Delta when g_inv(u) lands strictly inside Theta, Outside otherwise.
Region plane_region(PlanePoint u) noexcept;

/// Requires |v| > 1. Past |v| = 1e150 the quotient is rearranged so that
/// |v|^2 is never formed.
PlanePoint f0(PlanePoint v);

/// (u - conj(u0)) / (conj(u) - conj(u0)); requires Im u > 0 and u != u0.
PlanePoint f0_inv(PlanePoint u);

/// Requires p in Xi.
PlanePoint h_map(ParamPoint p);

/// The unique preimage in Xi of |v| > 1.
ParamPoint h_inv(PlanePoint v);

/// u - u0 for u = g(eta, xi), for any eta + xi < 0. Written in terms of
/// q = exp(sqrt(3)(eta + xi)) in (0, 1) with expm1 for the small differences,
/// so it neither overflows for xi -> -inf nor cancels for eta + xi -> 0.
PlanePoint g_offset(double eta, double xi) noexcept;

/// sin(xi) and sin(xi / 2) for xi = -eta - gap. On eta = -pi they come from
/// the gap itself, which keeps full relative accuracy as xi -> pi.
struct XiTrig {
  double sin_xi;
  double sin_half;
};
XiTrig xi_trig(double eta, double gap) noexcept;

/// g_offset in terms of gap = -eta - xi > 0, without forming eta + xi.
PlanePoint g_offset_gap(double eta, double gap) noexcept;

/// g(p) = f0(h(p)); requires p in Theta. The result lies in Q.
PlanePoint g_map(ParamPoint p);

/// Preimage in Theta of u in closure(Delta) \ ([0, inf) u {u0}). Points whose
/// computed eta misses [-pi, 0] by at most kThetaSnap (widened near u0, where
/// eta is ill-conditioned) are moved onto the nearest edge; anything further
/// out throws DomainError.
ParamPoint g_inv(PlanePoint u);

inline constexpr double kThetaSnap = 1e-10;

/// Samples of Gamma_eta. eta in [-pi, 0], every xi < -eta.
std::vector<PlanePoint> gamma_curve(double eta, std::span<const double> xi_grid);

}  // namespace vmg
