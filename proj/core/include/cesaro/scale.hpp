#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "cesaro/special.hpp"

namespace cesaro::scale {

// Always reduced, positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& r);  // "num/den"
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);

// Exact polynomial, coefficient i multiplies x^i. Trailing zeros are trimmed,
// so the zero polynomial has no coefficients.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  RationalPolynomial derivative() const;
  RationalPolynomial antiderivative() const;  // zero constant term
  Rational integral01() const;
  RationalPolynomial shifted(const Rational& c) const;  // p(x + c)

  Rational operator()(const Rational& x) const;
  double eval(double x) const;
  cplx eval(cplx x) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& k);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& k) { return a *= k; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

  std::vector<double> to_doubles() const;
  std::vector<std::string> to_strings() const;  // degree-ascending "num/den"
  std::string to_json() const;
  static RationalPolynomial from_json(const std::string& json);
  std::string pretty(const std::string& var = "a") const;

private:
  void trim();
  std::vector<Rational> c_;
};

std::vector<Rational> bernoulli_numbers(int n_max);
RationalPolynomial bernoulli_poly(int n);

enum class Kind { q, q_tilde, q_check, bernoulli_periodised };

const char* to_string(Kind k);

// Members indexed from the family's natural start (q: 1, q-tilde: 1,
// q-check: 0, Bernoulli: 0); member(n) takes that natural index.
class ScaleFamily {
public:
  ScaleFamily(Kind kind, std::vector<RationalPolynomial> members);

  Kind kind() const { return kind_; }
  int start() const;
  int n_max() const { return start() + static_cast<int>(m_.size()) - 1; }
  const RationalPolynomial& member(int n) const;
  // Constant c_n in d/da member_{n+1} = c_n member_n.
  Rational derivative_constant(int n) const;
  bool has_zero_mean() const { return kind_ != Kind::bernoulli_periodised; }

  // Period-1 evaluation at real X: alpha = X - floor(X); integers use alpha = 0.
  double eval_periodic(int n, double X) const;

private:
  Kind kind_;
  std::vector<RationalPolynomial> m_;
};

ScaleFamily build_scale(Kind kind, int n_max);

// b_n(k) = sum_{j=1}^k j^{n-1} as a polynomial in k.
RationalPolynomial sum_powers_poly(int n);

Rational qcheck_at_half(int n);

// q-check_n as a polynomial, n >= 0. Memoised behind a mutex.
RationalPolynomial qcheck(int n);
// Degree-ascending double coefficients of q-check_n.
std::vector<double> qcheck_coeffs(int n);
double horner(const std::vector<double>& c, double x);
double qcheck_periodic(int n, double X);

// Exact rational zeta(1 - n) for n >= 1 from the Bernoulli relation.
Rational zeta_one_minus(int n);

}  // namespace cesaro::scale
