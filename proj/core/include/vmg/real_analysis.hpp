#pragma once

#include <complex>

namespace vmg {

using PlanePoint = std::complex<double>;

/// Named constants of the construction, computed once at first use.
struct Constants {
  double t_max;    ///< T0(0) = sqrt(3) pi / 9, the top of the range of T0
  double gamma0;   ///< 2 / (exp(2 t_max) - 1)
  double edge;     ///< sqrt(2 + gamma0), right end of the support
  PlanePoint u0;   ///< (1 + sqrt(3) i) / 2, upper pole of t / (t^2 - t + 1)
  double alpha;    ///< -sqrt(3) pi / 9
  PlanePoint beta; ///< (3 - sqrt(3) i) / 6
};

const Constants& constants();

/// T0(s) = int_s^1 t / (t^2 - t + 1) dt in closed form. Strictly decreasing
/// on [0, inf) with T0(0) = t_max and T0(1) = 0. Throws DomainError for s < 0.
double t0(double s);

/// Derivative of T0: -s / (s^2 - s + 1).
double t0_derivative(double s) noexcept;

/// Same integral by Gauss-Legendre quadrature with `npoints` nodes.
double t0_integral(double s, int npoints = 64);

/// Default stopping tolerance for t0_inv, measured on s relative to max(1, s).
inline constexpr double kT0InvTolerance = 1e-13;

/// Inverse of T0 on (-inf, t_max]. Newton iteration kept inside a bisection
/// bracket [0, hi], with hi doubled from 2 until T0(hi) < w. Close to t_max
/// the start point is sqrt(2 (t_max - w)), since T0'(0) = 0 and T0''(0) = -1.
/// Throws DomainError for w > t_max.
double t0_inv(double w, double tol = kT0InvTolerance);

/// W(x) = (1/2) ln(1 + 2 / (x^2 - 2)) for |x| > sqrt(2). Throws DomainError otherwise.
double w_real(double x);

/// Closed-form moment generating function 1 / t0_inv((1/2) ln(1 / (1 - 2 x^2)))
/// for |x| < 1 / edge. Throws DomainError outside that interval.
double mgf_closed(double x, double tol = kT0InvTolerance);

}  // namespace vmg
