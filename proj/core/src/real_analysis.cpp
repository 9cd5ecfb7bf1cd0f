#include "vmg/real_analysis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vmg/errors.hpp"
#include "vmg/quadrature.hpp"

namespace vmg {

namespace {

using std::numbers::pi;
using std::numbers::sqrt3;

Constants make_constants() {
  Constants c{};
  c.t_max = sqrt3 * pi / 9.0;
  c.gamma0 = 2.0 / std::expm1(2.0 * c.t_max);
  c.edge = std::sqrt(2.0 + c.gamma0);
  c.u0 = {0.5, sqrt3 / 2.0};
  c.alpha = -c.t_max;
  c.beta = {0.5, -sqrt3 / 6.0};
  return c;
}

}  // namespace

const Constants& constants() {
  static const Constants c = make_constants();
  return c;
}

double t0(double s) {
  if (!(s >= 0.0)) throw DomainError("t0: argument must be >= 0, got " + std::to_string(s));
  // atan((2s-1)/sqrt3) + pi/6 folded into one atan2, so T0(0) = t_max exactly
  // and small s loses no digits.
  return constants().t_max - (sqrt3 / 3.0) * std::atan2(sqrt3 * s, 2.0 - s) -
         0.5 * std::log1p(s * (s - 1.0));
}

double t0_derivative(double s) noexcept { return -s / (s * s - s + 1.0); }

double t0_integral(double s, int npoints) {
  if (!(s >= 0.0)) throw DomainError("t0_integral: argument must be >= 0");
  if (s == 1.0) return 0.0;
  const GaussLegendreRule rule = gauss_legendre(npoints);
  const double half = 0.5 * (1.0 - s);
  const double mid = 0.5 * (1.0 + s);
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double t = mid + half * rule.nodes[i];
    terms[i] = rule.weights[i] * t / (t * t - t + 1.0);
  }
  return half * pairwise_sum(terms);
}

double t0_inv(double w, double tol) {
  const double t_max = constants().t_max;
  if (std::isnan(w) || w > t_max) {
    throw DomainError("t0_inv: argument exceeds sqrt(3)pi/9, got " + std::to_string(w));
  }
  if (w == t_max) return 0.0;

  // Bracket: t0(lo) >= w > t0(hi).
  double lo = 0.0;
  double hi = 2.0;
  while (t0(hi) >= w) {
    lo = hi;
    hi *= 2.0;
  }

  const double delta = t_max - w;
  double s = delta < 1e-4 ? std::sqrt(2.0 * delta) : 0.5 * (lo + hi);
  if (s <= lo || s >= hi) s = 0.5 * (lo + hi);

  for (int iter = 0; iter < 200; ++iter) {
    const double f = t0(s) - w;
    if (f == 0.0) return s;
    if (f > 0.0) lo = s;
    else hi = s;

    const double d = t0_derivative(s);
    double next = (d != 0.0) ? s - f / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);

    const double step = std::abs(next - s);
    s = next;
    if (step <= tol * std::max(1.0, s) || hi - lo <= tol * std::max(1.0, s)) break;
  }
  // One more Newton step brings a converged iterate to the last few ulps.
  const double d = t0_derivative(s);
  if (d != 0.0) {
    const double polished = s - (t0(s) - w) / d;
    if (polished >= lo && polished <= hi) s = polished;
  }
  return s;
}

double w_real(double x) {
  if (!(std::abs(x) > std::numbers::sqrt2)) {
    throw DomainError("w_real: need |x| > sqrt(2), got " + std::to_string(x));
  }
  return 0.5 * std::log1p(2.0 / (x * x - 2.0));
}

double mgf_closed(double x, double tol) {
  if (!(std::abs(x) < 1.0 / constants().edge)) {
    throw DomainError("mgf_closed: need |x| < 1/sqrt(2 + gamma0), got " + std::to_string(x));
  }
  return 1.0 / t0_inv(-0.5 * std::log1p(-2.0 * x * x), tol);
}

}  // namespace vmg
