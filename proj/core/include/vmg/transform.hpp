#pragma once

// T, its inverse, and the Cauchy-Stieltjes transform of the measure.
//
// T is the branch of
//   -sqrt(3)pi/9 - beta log(u - u0) - conj(beta) log(u - conj(u0))
// on the closure of Delta that agrees with T0 on [0, inf). It is inverted
// through H = T o g on the parameter trapezoid Theta: Im H(eta, xi) = eta/2
// and xi -> Re H(eta, xi) is strictly decreasing, so T^{-1}(w) is found by a
// one-dimensional bisection on the level curve eta = 2 Im w.
//
// The reciprocal transform is F(z) = z T^{-1}(W(z)) on the closed first
// quadrant, extended to Re z < 0 by F(z) = -conj(F(-conj z)); G = 1 / F.

#include <optional>

#include "vmg/geometry.hpp"
#include "vmg/real_analysis.hpp"

namespace vmg {

/// Distance from sqrt(2) under which a real argument is treated as sqrt(2)
/// itself. There Re W -> +inf and T^{-1}(W) -> u0, so the limit is returned.
inline constexpr double kSqrt2Snap = 1e-10;

/// Distance from sqrt(3)pi/9 under which T^{-1} uses the local expansion
/// T(u) = sqrt(3)pi/9 - u^2/2 - u^3/3 + O(u^5) around the branch point u = 0.
inline constexpr double kBranchPointSnap = 1e-12;

/// Exact form of H = T o g on Theta (zero branch integers):
///   Re H = -(sqrt3/6)(Arg(R e^{i xi} - 1) - Arg(u - conj u0)
///                     + 2 ceil((xi - pi) / 2pi) pi + pi/6)
///          - ln(|u - u0| |u - conj u0|) / 2
///   Im H = eta / 2
/// with R = exp(-sqrt3 (eta + xi)) and u = g(eta, xi).
PlanePoint H_exact(ParamPoint p);

/// Inverse of H on D \ L. Throws OnRayError for w in L (use t0_inv) and
/// DomainError outside D.
ParamPoint H_inv(PlanePoint w);

/// T on closure(Delta) \ {u0}: T0 on [0, inf), H o g^{-1} elsewhere.
PlanePoint T_of(PlanePoint u);

/// T^{-1} on D: t0_inv on L, g o H^{-1} on D \ L.
PlanePoint t_inv(PlanePoint w);

/// Extension of W to (C+ u R) \ {-sqrt2, 0, sqrt2}:
///   (1/2) Log(1 + 2 / (z^2 - 2))           for z off (-sqrt2, sqrt2)
///   (1/2) ln(x^2 / (2 - x^2)) - i pi/2     for x in (0, sqrt2)
///   (1/2) ln(x^2 / (2 - x^2)) + i pi/2     for x in (-sqrt2, 0)
/// The two real-segment cases are the boundary values from above.
/// Throws PoleError at -sqrt2, 0, sqrt2 and DomainError for Im z < 0.
PlanePoint w_complex(PlanePoint z);

/// sqrt(r) e^{i phi / 2} with phi taken in (-pi/2, 3pi/2]; maps the closed
/// upper half-plane onto the closed first quadrant. branch_sqrt(0) = 0.
PlanePoint branch_sqrt(PlanePoint v) noexcept;

/// Inverse of W restricted to closure(Q) \ {0, sqrt2}:
/// e^w branch_sqrt(2 / (e^{2w} - 1)). Throws PoleError at w = 0.
PlanePoint w1_inv(PlanePoint w);

/// Reciprocal Cauchy-Stieltjes transform on (C+ u R) \ {0}.
/// F(+-sqrt2) = +-sqrt2 u0 (reflected), F(+-edge) = 0.
PlanePoint F_mu(PlanePoint z);

/// Cauchy-Stieltjes transform on (C+ u R) \ {+-edge}, including the boundary
/// values G(0) = -(sqrt2/2) e^{sqrt3 pi/9} i and G(sqrt2) = (sqrt2 - sqrt6 i)/4.
/// Throws PoleError at +-edge.
PlanePoint G_mu(PlanePoint z);

/// Every stage of the transform pipeline at one point.
struct TransformValue {
  PlanePoint z;
  std::optional<PlanePoint> w;  ///< W(z); empty at the poles 0, +-sqrt2
  std::optional<PlanePoint> u;  ///< T^{-1}(W(z)) = F / z; empty at 0
  PlanePoint F;
  std::optional<PlanePoint> G;  ///< empty at +-edge, where G is infinite
};

TransformValue evaluate_transform(PlanePoint z);

}  // namespace vmg
