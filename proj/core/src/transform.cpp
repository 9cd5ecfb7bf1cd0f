#include "vmg/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "vmg/errors.hpp"

namespace vmg {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;
using std::numbers::sqrt3;

/// e^v - 1 without cancellation for small |v|.
PlanePoint cexpm1(PlanePoint v) {
  const double x = v.real();
  const double y = v.imag();
  const double half_sin = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin, std::exp(x) * std::sin(y)};
}

/// Principal Log(1 + v) for |v| not close to 1.
PlanePoint clog1p(PlanePoint v) {
  const double a = v.real();
  const double b = v.imag();
  return {0.5 * std::log1p(a * (2.0 + a) + b * b), std::atan2(b, 1.0 + a)};
}

bool is_real(PlanePoint z) noexcept { return z.imag() == 0.0; }

bool near_sqrt2(PlanePoint z) noexcept {
  return is_real(z) && std::abs(std::abs(z.real()) - sqrt2) <= kSqrt2Snap;
}

/// Re H at xi = -eta - gap, gap > 0.
double re_h(double eta, double gap) {
  const double a = -sqrt3 * gap;
  const double one_minus_q = -std::expm1(a);
  const double one_minus_q2 = -std::expm1(2.0 * a);

  // n is the ceiling term of the exact form; sin and sin(xi/2) squared only
  // see xi modulo 2 pi.
  const double xi = -eta - gap;
  const double n = std::ceil((xi - pi) / (2.0 * pi));
  const XiTrig t = xi_trig(eta, gap);
  // e^{i xi} - q = (R e^{i xi} - 1) / R, so both share the principal argument.
  const PlanePoint diff{-2.0 * t.sin_half * t.sin_half + one_minus_q, t.sin_xi};
  const double arg_v_minus_1 = std::arg(diff);

  const PlanePoint d1 = g_offset_gap(eta, gap);  // u - u0
  const PlanePoint d2 = d1 + PlanePoint{0.0, sqrt3};  // u - conj(u0)

  // ln|u - u0| = ln(sqrt3) + a + ln|e^{i xi} - q| - ln(1 - q^2), stable as q -> 0.
  const double log_abs_d1 = 0.5 * std::log(3.0) + a + std::log(std::abs(diff)) - std::log(one_minus_q2);
  const double log_abs_d2 = std::log(std::abs(d2));

  return -(sqrt3 / 6.0) * (arg_v_minus_1 - std::arg(d2) + 2.0 * n * pi + pi / 6.0) -
         0.5 * (log_abs_d1 + log_abs_d2);
}

}  // namespace

PlanePoint H_exact(ParamPoint p) {
  if (!in_theta(p)) {
    throw DomainError("H_exact: point outside Theta (eta=" + std::to_string(p.eta) +
                      ", xi=" + std::to_string(p.xi) + ")");
  }
  return {re_h(p.eta, -(p.eta + p.xi)), 0.5 * p.eta};
}

namespace {

/// Solves Re H(eta, -eta - gap) = Re w on eta = 2 Im w for the gap.
/// Re H increases with the gap; gap -> 0 is excluded (Re H -> -inf or
/// sqrt(3)pi/9 there).
std::pair<double, double> solve_gap(PlanePoint w) {
  if (!in_D(w)) throw DomainError("H_inv: w outside the strip -pi/2 <= Im w <= 0");
  if (in_L(w)) throw OnRayError("H_inv: w lies on L; use t0_inv");

  const double eta = 2.0 * w.imag();
  const double target = w.real();

  double lo = 0.0;
  double hi = 1.0;
  for (int k = 1; re_h(eta, hi) <= target; ++k) {
    if (k > 64) throw DomainError("H_inv: failed to bracket Re w = " + std::to_string(target));
    lo = hi;
    hi = std::ldexp(1.0, k);
  }

  // Invariant: re_h(hi) > target, and re_h(lo) <= target or lo == 0.
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (re_h(eta, mid) > target) hi = mid;
    else lo = mid;
  }
  if (lo > 0.0 && std::abs(re_h(eta, lo) - target) < std::abs(re_h(eta, hi) - target)) return {eta, lo};
  return {eta, hi};
}

}  // namespace

ParamPoint H_inv(PlanePoint w) {
  const auto [eta, gap] = solve_gap(w);
  return {eta, -eta - gap};
}


PlanePoint T_of(PlanePoint u) {
  if (u == constants().u0) throw DomainError("T_of: u0 is excluded from the domain of T");
  if (u.imag() < 0.0) throw DomainError("T_of: Im u < 0 is outside the closure of Delta");
  if (is_real(u)) {
    if (u.real() < 0.0) throw DomainError("T_of: negative reals are outside the closure of Delta");
    return {t0(u.real()), 0.0};
  }
  return H_exact(g_inv(u));
}

PlanePoint t_inv(PlanePoint w) {
  if (!in_D(w)) throw DomainError("t_inv: w outside the strip -pi/2 <= Im w <= 0");
  const double t_max = constants().t_max;
  if (std::abs(w - t_max) < kBranchPointSnap) {
    // t_max - T(u) = u^2/2 + u^3/3 + O(u^5), inverted to third order.
    const PlanePoint v = branch_sqrt(2.0 * (t_max - w));
    return v * (1.0 + v * (-1.0 / 3.0 + v * (5.0 / 18.0)));
  }
  if (in_L(w)) return {t0_inv(w.real()), 0.0};
  const auto [eta, gap] = solve_gap(w);
  return constants().u0 + g_offset_gap(eta, gap);
}

PlanePoint w_complex(PlanePoint z) {
  if (z.imag() < 0.0) throw DomainError("w_complex: Im z < 0");
  if (is_real(z)) {
    const double x = z.real();
    const double ax = std::abs(x);
    if (x == 0.0 || ax == sqrt2) throw PoleError("w_complex: branch point at " + std::to_string(x));
    if (ax > sqrt2) return {0.5 * std::log1p(2.0 / (x * x - 2.0)), 0.0};
    const double re = std::log(ax) - 0.5 * std::log(2.0 - x * x);
    return {re, x > 0.0 ? -0.5 * pi : 0.5 * pi};
  }
  // 1 + 2 / (z^2 - 2) = z^2 / (z^2 - 2); the quotient keeps small |z| exact,
  // log1p keeps large |z| exact.
  const double r2 = std::norm(z);
  // z^2 underflows; z^2 / (z^2 - 2) = -z^2 / 2 to working precision.
  if (r2 < 1e-200) return {0.5 * std::log(0.5 * r2), std::arg(z) - 0.5 * pi};
  const PlanePoint z2 = z * z;
  if (r2 < 1.0) return 0.5 * std::log(z2 / (z2 - 2.0));
  return 0.5 * clog1p(2.0 / (z2 - 2.0));
}

PlanePoint branch_sqrt(PlanePoint v) noexcept {
  if (v == 0.0) return 0.0;
  double phi = std::arg(v);
  if (phi <= -0.5 * pi) phi += 2.0 * pi;
  return std::polar(std::sqrt(std::abs(v)), 0.5 * phi);
}

PlanePoint w1_inv(PlanePoint w) {
  if (!in_D(w)) throw DomainError("w1_inv: w outside the strip -pi/2 <= Im w <= 0");
  if (w == 0.0) throw PoleError("w1_inv: w = 0 corresponds to z = infinity");
  if (w.real() < 0.0) return std::exp(w) * branch_sqrt(2.0 / cexpm1(2.0 * w));
  // Same root written as sqrt(2 / (1 - e^{-2w})); avoids overflow of e^{2w}.
  return branch_sqrt(-2.0 / cexpm1(-2.0 * w));
}

PlanePoint F_mu(PlanePoint z) {
  if (z.imag() < 0.0) throw DomainError("F_mu: Im z < 0");
  if (z == 0.0) throw PoleError("F_mu: z = 0; use the boundary value of G_mu");
  if (z.real() < 0.0) return -std::conj(F_mu(-std::conj(z)));

  const Constants& c = constants();
  if (near_sqrt2(z)) return sqrt2 * c.u0;
  if (is_real(z) && z.real() == c.edge) return 0.0;

  PlanePoint w = w_complex(z);
  // W maps the closed first quadrant into D; keep rounding from leaving it.
  w.imag(std::clamp(w.imag(), -0.5 * pi, 0.0));
  return z * t_inv(w);
}

PlanePoint G_mu(PlanePoint z) {
  if (z.imag() < 0.0) throw DomainError("G_mu: Im z < 0");
  const Constants& c = constants();
  if (z == 0.0) return {0.0, -0.5 * sqrt2 * std::exp(c.t_max)};
  if (near_sqrt2(z)) {
    const PlanePoint at_sqrt2{0.25 * sqrt2, -0.25 * std::sqrt(6.0)};
    return z.real() > 0.0 ? at_sqrt2 : -std::conj(at_sqrt2);
  }
  const PlanePoint f = F_mu(z);
  if (f == 0.0) throw PoleError("G_mu: pole at the support edge");
  return 1.0 / f;
}

TransformValue evaluate_transform(PlanePoint z) {
  TransformValue out{};
  out.z = z;
  if (z == 0.0) {
    out.G = G_mu(z);
    out.F = 1.0 / *out.G;
    return out;
  }
  out.F = F_mu(z);
  if (!near_sqrt2(z)) out.w = w_complex(z);
  out.u = out.F / z;
  if (out.F != 0.0) out.G = G_mu(z);
  return out;
}

}  // namespace vmg
