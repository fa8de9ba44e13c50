#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/scale.hpp"
#include "cesaro/special.hpp"

namespace cesaro::summation {

using scale::Rational;
using scale::RationalPolynomial;

// ---------------------------------------------------------------------------
// Polynomials in the averaging operator P.

class OperatorPolynomial {
public:
  OperatorPolynomial();  // the identity, P^0
  explicit OperatorPolynomial(std::vector<cplx> coeffs);
  explicit OperatorPolynomial(const RationalPolynomial& exact);

  static OperatorPolynomial power(int m);
  // scale * (P - root)
  static OperatorPolynomial linear(cplx scale, cplx root);
  static OperatorPolynomial linear(const Rational& scale, const Rational& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return c_; }
  const std::optional<RationalPolynomial>& exact() const { return exact_; }
  cplx at(cplx P) const;
  bool regular(double tol = 1e-12) const;
  std::string to_string() const;

  friend OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b);

private:
  std::vector<cplx> c_;
  std::optional<RationalPolynomial> exact_;
};

enum class Mode { theorem1, theorem2 };

// theorem2: q(P; s) = ((2 - s)/(1 - s)) (P - 1/(2 - s)) P^{floor(Re(-s)) + 1}.
// theorem1: q_delta(P) = ((delta + 1)/delta) (P - 1/(delta + 1)), times
// P^{floor(Re delta) + 1} when with_power is set.
OperatorPolynomial regular_poly(cplx x, Mode mode, std::optional<bool> with_power = std::nullopt);
// prod_{d=1}^{n} ((d + 1)/d) (P - 1/(d + 1)) * P^{n + 1}: the discrete k^n alpha^r case.
OperatorPolynomial discrete_poly(int n);

// Exact real rational for values with a short binary expansion, else nullopt.
std::optional<Rational> exact_rational(cplx v);

struct IdentityCheck {
  bool equal;
  int differing_degree;  // -1 when equal
  RationalPolynomial lhs, rhs;
};
// sum_{j=0}^{n} (P - 1)(P - 1/2)...(P - 1/(n - j)) P^j = (n + 1)(P - 1/2)...(P - 1/(n + 1)).
IdentityCheck operator_identity_check(int n);

// ---------------------------------------------------------------------------
// Exact term algebra.

// coeff * X^x_power * S(X), with S one of: 1 (scale_index < 0), q-check_r,
// or q-check_r - q-check_r(0) when shifted. A residual term stands for
// coeff * X^{-1} * integral_0^X x^x_power S(x) dx, i.e. a deferred P.
struct Term {
  cplx coeff = 1.0;
  cplx x_power = 0.0;
  int scale_index = -1;
  bool shifted = false;
  bool residual = false;

  bool same_key(const Term& o) const;
};

class TermSum {
public:
  TermSum() = default;
  explicit TermSum(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  void add(const Term& t);
  TermSum& operator+=(const TermSum& o);
  TermSum& operator*=(cplx k);

  // Value at X > 0; at an integer X the periodic factors take their right
  // limit (alpha = 0), eval_left uses alpha -> 1.
  cplx eval(double X) const;
  cplx eval_left(double X) const;
  // Same sum kept in long double, for comparisons below one double ulp.
  std::complex<long double> eval_extended(double X) const;

private:
  std::vector<Term> terms_;
};

TermSum apply_P_symbolic(const TermSum& input);
// Umbral (X - q-check)^n = sum_{j=0}^{n} C(n, j) (-1)^j X^{n - j} q-check_j; the
// j = 0 term carries q-check_0, not 1.
TermSum x_minus_qcheck_power(int n);

// ---------------------------------------------------------------------------
// Numeric realisation on a uniform grid.

struct GridFunction {
  double x_max = 0;
  double step = 0;   // 1 / 2^m
  cplx z0 = 0.0;     // P divides by z0 + X
  std::vector<cplx> samples;  // right-continuous values at i * step
  // Left limits at the integers 0..floor(x_max); empty when continuous.
  std::vector<cplx> left;
  // Exact cumulative integral at each grid point, used by the first P pass.
  std::optional<std::vector<cplx>> exact_cumulative;

  size_t size() const { return samples.size(); }
  size_t per_unit() const;
  cplx at(double X) const;  // X must be a grid point
};

// Grid of x_max / step + 1 points; step must be 1/2^m with m >= 1 and x_max an
// integer multiple of step.
GridFunction make_grid(double x_max, double step, cplx z0 = 0.0);
// Samples f (right limits) and, for step functions, the left limits.
template <class F>
GridFunction sample(F f, double x_max, double step, cplx z0 = 0.0);
GridFunction sample(const TermSum& t, double x_max, double step);

GridFunction apply_P_numeric(const GridFunction& f, int repetitions = 1);
GridFunction apply_operator(const OperatorPolynomial& op, const GridFunction& f);

struct LimitEstimate {
  cplx estimate;
  double error_estimate;
  double fit_residual;
};

struct LimitOptions {
  double tol = 1e-2;        // largest acceptable fit residual
  int extra_smoothing = 1;  // additional plain P passes after op
  // Residue model (b_0 + b_1 ln X + ... + b_M ln^M X) / X; defaults to the
  // degree of the applied polynomial minus one.
  std::optional<int> log_powers;
  double window_start = 0.125;       // fit over [window_start * X_max, X_max]
  double check_window_start = 0.25;  // second fit, for the error estimate
};
// Applies op (then the extra smoothing) to f and fits a + residue model over
// the window. Each P turns a 1/X boundary residue into one more power of
// ln X / X, hence the log terms. The error estimate is the spread between the
// two windows, twice the spread against the same fit at half the horizon, and
// the largest fit residual.
LimitEstimate cesaro_limit(const GridFunction& f, const OperatorPolynomial& op, const LimitOptions& opt = {});
LimitEstimate cesaro_limit(const TermSum& f, const OperatorPolynomial& op, double x_max, double step,
                           const LimitOptions& opt = {});

// max |P^n[X^n q_r] - ((-1)^n / C(r+n, n)) (P-1)(P-1/2)...(P-1/n)[q_{r+n}]| at
// X in {10.25, 25.5, 50.75}.
double pn_identity_numeric(int n, int r, double step = 1.0 / 128, double tol = 1e-5);
// max |P^{n+1}[(X - q)^n] - (-1)^n (n+1)(P-1/2)...(P-1/(n+1)) P[q_n]| at the same points.
double xq_identity_numeric(int n, double step = 1.0 / 128, double tol = 1e-5);

// ---------------------------------------------------------------------------

template <class F>
GridFunction sample(F f, double x_max, double step, cplx z0) {
  GridFunction g = make_grid(x_max, step, z0);
  for (size_t i = 0; i < g.samples.size(); ++i) g.samples[i] = f(static_cast<double>(i) * step, false);
  size_t units = static_cast<size_t>(x_max);
  g.left.resize(units + 1);
  for (size_t n = 0; n <= units; ++n) g.left[n] = (n == 0) ? g.samples[0] : f(static_cast<double>(n), true);
  return g;
}

}  // namespace cesaro::summation
