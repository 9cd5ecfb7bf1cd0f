#include "vmg/moments.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace vmg {

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::linear_power(const Rational& a, const Rational& b, unsigned n) {
  // sum_k binom(n,k) a^{n-k} b^k s^k
  std::vector<Rational> out(n + 1);
  BigInt binom = 1;
  for (unsigned k = 0; k <= n; ++k) {
    Rational a_pow = 1, b_pow = 1;
    mpz_pow_ui(a_pow.get_num_mpz_t(), a.get_num_mpz_t(), n - k);
    mpz_pow_ui(a_pow.get_den_mpz_t(), a.get_den_mpz_t(), n - k);
    mpz_pow_ui(b_pow.get_num_mpz_t(), b.get_num_mpz_t(), k);
    mpz_pow_ui(b_pow.get_den_mpz_t(), b.get_den_mpz_t(), k);
    a_pow.canonicalize();
    b_pow.canonicalize();
    out[k] = Rational(binom) * a_pow * b_pow;
    binom = binom * (n - k) / (k + 1);
  }
  return RationalPoly(std::move(out));
}

Rational RationalPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational RationalPoly::operator()(const Rational& s) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= s;
    acc += *it;
  }
  return acc;
}

double RationalPoly::evaluate(double s) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + it->get_d();
  return acc;
}

RationalPoly RationalPoly::integral_from_zero() const {
  if (is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<unsigned long>(i + 1));
  }
  return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  Rational term;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpq_mul(term.get_mpq_t(), lhs.coeffs_[i].get_mpq_t(), rhs.coeffs_[j].get_mpq_t());
      out[i + j] += term;
    }
  }
  return RationalPoly(std::move(out));
}

bool operator==(const RationalPoly& lhs, const RationalPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string to_string(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    os << Rational(abs(c)).get_str();
    if (i >= 1) os << " s";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<BigInt> catalan_table(unsigned n) {
  std::vector<BigInt> c(n + 1);
  c[0] = 1;
  for (unsigned m = 0; m < n; ++m) {
    BigInt sum = 0;
    for (unsigned k = 0; k <= m; ++k) sum += c[k] * c[m - k];
    c[m + 1] = sum;
  }
  return c;
}

BigInt catalan(unsigned n) { return catalan_table(n).back(); }

std::vector<RationalPoly> p_polynomials(unsigned max_order) {
  const std::vector<BigInt> cat = catalan_table(max_order);
  std::vector<RationalPoly> p;
  p.reserve(max_order + 1);
  p.push_back(RationalPoly::constant(1));

  // kernel[m] = int_0^s P_m + 2^{-m} C_m (1-s)^{m+1}; it only depends on P_m,
  // so it is built once, right after P_m is known.
  std::vector<RationalPoly> kernel;
  kernel.reserve(max_order);
  for (unsigned n = 0; n < max_order; ++n) {
    RationalPoly tail = RationalPoly::linear_power(1, -1, n + 1);
    Rational scale(cat[n]);
    mpq_div_2exp(scale.get_mpq_t(), scale.get_mpq_t(), n);
    tail *= scale;
    kernel.push_back(p[n].integral_from_zero() + tail);

    RationalPoly next;
    for (unsigned m = 0; m <= n; ++m) next += kernel[m] * p[n - m];
    p.push_back(std::move(next));
  }
  return p;
}

MomentTable::MomentTable(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("MomentTable needs at least m_0");
}

MomentTable moments(unsigned max_order) {
  const std::vector<RationalPoly> p = p_polynomials(max_order / 2);
  std::vector<Rational> m(max_order + 1);
  for (unsigned n = 0; n <= max_order; n += 2) m[n] = p[n / 2](Rational(1));
  return MomentTable(std::move(m));
}

double mgf_partial(const MomentTable& table, double x, unsigned N) {
  if (N > table.max_order()) {
    throw std::out_of_range("mgf_partial: truncation order exceeds the moment table");
  }
  double sum = 0.0;
  double power = 1.0;
  for (unsigned n = 0; n <= N; ++n) {
    if (table[n] != 0) sum += table[n].get_d() * power;
    power *= x;
  }
  return sum;
}

double mgf_partial(double x, unsigned N) { return mgf_partial(moments(N), x, N); }

}  // namespace vmg
