#include "vmg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vmg/errors.hpp"

namespace vmg {

namespace {

using std::numbers::pi;
using std::numbers::sqrt3;

constexpr double kNaiveF0Limit = 1e150;

std::string describe(ParamPoint p) {
  return "(eta=" + std::to_string(p.eta) + ", xi=" + std::to_string(p.xi) + ")";
}

}  // namespace

std::string_view to_string(Region r) noexcept {
  switch (r) {
    case Region::ThetaInterior: return "THETA_INT";
    case Region::ThetaBoundary: return "THETA_BDRY";
    case Region::Xi: return "XI";
    case Region::Delta: return "DELTA";
    case Region::DStrip: return "D_STRIP";
    case Region::LRay: return "L_RAY";
    case Region::QQuad: return "Q_QUAD";
    case Region::Outside: return "OUTSIDE";
  }
  return "OUTSIDE";
}

bool in_theta(ParamPoint p) noexcept { return p.eta >= -pi && p.eta <= 0.0 && p.xi < -p.eta; }

bool in_xi(ParamPoint p) noexcept {
  return p.eta > -1.5 * pi && p.eta <= 0.5 * pi && p.xi < -p.eta;
}

bool in_D(PlanePoint w) noexcept { return w.imag() >= -0.5 * pi && w.imag() <= 0.0; }

bool in_L(PlanePoint w) noexcept { return w.imag() == 0.0 && w.real() <= constants().t_max; }

bool in_Q(PlanePoint z) noexcept { return z.real() > 0.0 && z.imag() > 0.0; }

ThetaSide classify_theta(ParamPoint p) noexcept {
  if (!in_theta(p)) return ThetaSide::Outside;
  if (p.eta == 0.0) return ThetaSide::Top;
  if (p.eta == -pi) return ThetaSide::Bottom;
  return ThetaSide::Interior;
}

Region param_region(ParamPoint p) noexcept {
  switch (classify_theta(p)) {
    case ThetaSide::Interior: return Region::ThetaInterior;
    case ThetaSide::Top:
    case ThetaSide::Bottom: return Region::ThetaBoundary;
    case ThetaSide::Outside: break;
  }
  return in_xi(p) ? Region::Xi : Region::Outside;
}

Region strip_region(PlanePoint w) noexcept {
  if (!in_D(w)) return Region::Outside;
  return in_L(w) ? Region::LRay : Region::DStrip;
}

Region plane_region(PlanePoint u) noexcept {
  try {
    return classify_theta(g_inv(u)) == ThetaSide::Interior ? Region::Delta : Region::Outside;
  } catch (const DomainError&) {
    return Region::Outside;
  }
}

PlanePoint f0(PlanePoint v) {
  const double r = std::abs(v);
  if (!(r > 1.0)) throw DomainError("f0: need |v| > 1, got |v| = " + std::to_string(r));
  const PlanePoint i_sqrt3{0.0, sqrt3};
  if (r <= kNaiveF0Limit) return i_sqrt3 * (v - 1.0) / (1.0 - std::norm(v)) + constants().u0;
  // Divide numerator and denominator by R = |v|.
  const PlanePoint unit = v / r;
  return -i_sqrt3 * (unit - 1.0 / r) / (r - 1.0 / r) + constants().u0;
}

PlanePoint f0_inv(PlanePoint u) {
  const PlanePoint u0 = constants().u0;
  if (!(u.imag() > 0.0)) throw DomainError("f0_inv: need Im u > 0");
  if (u == u0) throw DomainError("f0_inv: u0 has no preimage");
  const PlanePoint u0_bar = std::conj(u0);
  return (u - u0_bar) / (std::conj(u) - u0_bar);
}

PlanePoint h_map(ParamPoint p) {
  if (!in_xi(p)) throw DomainError("h_map: point outside Xi " + describe(p));
  return std::polar(std::exp(-sqrt3 * (p.eta + p.xi)), p.xi);
}

ParamPoint h_inv(PlanePoint v) {
  const double r = std::abs(v);
  if (!(r > 1.0)) throw DomainError("h_inv: need |v| > 1, got |v| = " + std::to_string(r));
  const double arg = std::arg(v);
  const double eta0 = -std::log(r) / sqrt3 - arg;
  const double k = std::ceil(eta0 / (2.0 * pi) - 0.25);
  return {eta0 - 2.0 * k * pi, arg + 2.0 * k * pi};
}

XiTrig xi_trig(double eta, double gap) noexcept {
  if (eta == -pi && gap < pi) return {std::sin(gap), std::cos(0.5 * gap)};
  const double xi = -eta - gap;
  return {std::sin(xi), std::sin(0.5 * xi)};
}

PlanePoint g_offset_gap(double eta, double gap) noexcept {
  const double a = -sqrt3 * gap;
  const double q = std::exp(a);
  const XiTrig t = xi_trig(eta, gap);
  // e^{i xi} - q, with (cos xi - 1) and (1 - q) formed without cancellation.
  const PlanePoint diff{-2.0 * t.sin_half * t.sin_half - std::expm1(a), t.sin_xi};
  const double one_minus_q2 = -std::expm1(2.0 * a);
  return PlanePoint{0.0, -sqrt3 * q / one_minus_q2} * diff;
}

PlanePoint g_offset(double eta, double xi) noexcept { return g_offset_gap(eta, -(eta + xi)); }

PlanePoint g_map(ParamPoint p) {
  if (!in_theta(p)) throw DomainError("g_map: point outside Theta " + describe(p));
  return constants().u0 + g_offset(p.eta, p.xi);
}

ParamPoint g_inv(PlanePoint u) {
  if (u.imag() == 0.0 && u.real() >= 0.0) {
    throw DomainError("g_inv: points of [0, inf) are not in g(Theta)");
  }
  const ParamPoint base = h_inv(f0_inv(u));
  // eta carries an error of about ulp(u) / (sqrt3 |u - u0|) near u0.
  const double snap =
      std::max(kThetaSnap, 16.0 * std::numeric_limits<double>::epsilon() / std::abs(u - constants().u0));
  for (int k = -1; k <= 1; ++k) {
    ParamPoint p{base.eta - 2.0 * k * pi, base.xi + 2.0 * k * pi};
    if (p.eta < -pi && p.eta >= -pi - snap) p.eta = -pi;
    if (p.eta > 0.0 && p.eta <= snap) p.eta = 0.0;
    if (in_theta(p)) return p;
  }
  throw DomainError("g_inv: point lies outside the closure of Delta");
}

std::vector<PlanePoint> gamma_curve(double eta, std::span<const double> xi_grid) {
  if (!(eta >= -pi && eta <= 0.0)) {
    throw DomainError("gamma_curve: eta must lie in [-pi, 0], got " + std::to_string(eta));
  }
  std::vector<PlanePoint> out;
  out.reserve(xi_grid.size());
  for (double xi : xi_grid) {
    if (!(xi < -eta)) throw DomainError("gamma_curve: need xi < -eta, got xi = " + std::to_string(xi));
    out.push_back(g_map({eta, xi}));
  }
  return out;
}

}  // namespace vmg
