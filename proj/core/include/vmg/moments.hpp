#pragma once

// Exact moment sequence of the standard V-monotone Gaussian measure.
//
// The even moments are m_{2n} = P_n(1), where P_0 = 1 and
//
//   P_{n+1}(s) = sum_{m=0}^{n} ( int_0^s P_m(t) dt + 2^{-m} C_m (1-s)^{m+1} ) P_{n-m}(s),
//
// with C_m the Catalan numbers. Odd moments vanish. Everything here is exact
// rational arithmetic; conversion to double happens only in mgf_partial.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vmg {

using BigInt = mpz_class;
/// Always canonical (gcd(num, den) = 1, den > 0); GMP maintains this for
/// every arithmetic result.
using Rational = mpq_class;

/// "num/den", with the denominator always printed ("2/1", "0/1").
std::string to_fraction_string(const Rational& q);

/// Dense univariate polynomial in s with exact rational coefficients.
/// Coefficient i multiplies s^i. The zero polynomial has no coefficients;
/// otherwise the leading coefficient is nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);

  /// (a + b s)^n, expanded with binomial coefficients.
  static RationalPoly linear_power(const Rational& a, const Rational& b, unsigned n);

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of s^i; zero past the degree.
  [[nodiscard]] Rational coeff(std::size_t i) const;

  /// Horner evaluation, exact.
  [[nodiscard]] Rational operator()(const Rational& s) const;
  [[nodiscard]] double evaluate(double s) const;

  /// The antiderivative vanishing at 0, i.e. s -> int_0^s p(t) dt.
  [[nodiscard]] RationalPoly integral_from_zero() const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& c);
  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
  friend RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs);
  friend bool operator==(const RationalPoly& lhs, const RationalPoly& rhs);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::string to_string(const RationalPoly& p);

/// C_n via C_{n+1} = sum_{k=0}^{n} C_k C_{n-k}.
BigInt catalan(unsigned n);

/// C_0 .. C_n in one pass of the same recurrence.
std::vector<BigInt> catalan_table(unsigned n);

/// P_0 .. P_max_order.
std::vector<RationalPoly> p_polynomials(unsigned max_order);

/// m_0 .. m_N. Invariants: odd entries are zero, m_0 = 1, 0 <= m_{2k} <= C_k.
class MomentTable {
 public:
  explicit MomentTable(std::vector<Rational> values);

  [[nodiscard]] unsigned max_order() const noexcept {
    return static_cast<unsigned>(values_.size() - 1);
  }
  [[nodiscard]] const Rational& operator[](std::size_t n) const { return values_.at(n); }
  [[nodiscard]] std::span<const Rational> values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

MomentTable moments(unsigned max_order);

/// Truncated moment generating series sum_{n=0}^{N} m_n x^n, accumulated
/// from the lowest degree up. Requires N <= table.max_order().
double mgf_partial(const MomentTable& table, double x, unsigned N);

/// Convenience overload that builds the table first.
double mgf_partial(double x, unsigned N);

}  // namespace vmg
