#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cesaro/averaging.hpp"
#include "cesaro/special.hpp"

namespace cesaro::zetafns {

// sum_{j=1}^{floor X} (z0 + j)^{-s}, Kahan-compensated.
cplx psum_eval(cplx z0, cplx s, double X);

// The p-sum as a step function of X = k + alpha.
struct PSum {
  cplx z0 = 0.0;
  cplx s = 0.0;

  cplx operator()(double X) const { return psum_eval(z0, s, X); }
  // Samples of s(X) - z^{1-s}/(1-s), z = z0 + X, with left limits and the
  // exact cumulative integral; the grid's P divides by z0 + X.
  summation::GridFunction remainder_grid(double x_max, double step) const;
};

// X^{1-s}/(1-s) + zeta(s) - sum_{j=0}^{J} (-1)^j C(-s, j) X^{-s-j} q-check_j.
summation::TermSum psum_term_expansion(cplx s, int J);
// Smallest J whose first omitted term is below tol at X (capped at 200);
// exact (-s) for s a non-positive integer.
int psum_expansion_order(cplx s, double X, double tol);

// Caller-supplied f for the Euler-Maclaurin engine.
struct EMFunction {
  std::function<cplx(double x, int order)> derivative;  // f^{(order)}(x)
  std::function<cplx(double x)> antiderivative;         // any F with F' = f
  int max_order = 0;
};

struct EMApproximation {
  int M = 0;
  long long k = 0;
  cplx integral_part;  // F(k); the constant of F is absorbed by C_f
  cplx constant_part;  // C_f, measured at the anchor
  long long anchor = 0;
  // classical[r] = B_{r+1}/(r+1)! f^{(r)}(k) for r = 0..2M (r = 0 is f(k)/2)
  std::vector<cplx> classical;
  // compact[r] = -zeta(-r) f^{(r)}(k)/r!, the same terms in the tau form
  std::vector<cplx> compact;

  cplx classical_value() const;
  cplx compact_value() const;
};

// Both forms of sum_{n<=k} f(n) ~ C_f + F(k) + corrections. C_f is read off
// at the anchor (default max(k, 100)) as the direct sum minus the rest.
EMApproximation euler_maclaurin(const EMFunction& f, long long k, int M, long long anchor = 0);

struct RouteValue {
  cplx value;
  double error_estimate;
  std::string route;
  int terms = 0;
};

// zeta_H(z0; s) = sum_{n>=1} (z0 + n)^{-s} from
//   (1 + z0)^{-s} + sum_j C(-s, j) (zeta(s + j) - 1) z0^j,   |z0| <= 1,
// with the finite closed form for s a non-positive integer.
RouteValue hurwitz_taylor(cplx z0, cplx s);
// Cesaro limit of the p-sum remainder under regular_poly(s, theorem2).
RouteValue hurwitz_cesaro(cplx z0, cplx s, double x_max = 2000, double step = 1.0 / 128);
// (z0 + tau)^{-s} with subject z0 (descending powers), after shifting z0 by
// whole steps until the asymptotic series is accurate.
RouteValue hurwitz_asymptotic(cplx z0, cplx s);
// Taylor when |z0| <= 1, asymptotic otherwise.
RouteValue hurwitz(cplx z0, cplx s);

// integral_{-1}^{0} zeta_H(z0; s) dz0, expected 0.
RouteValue hurwitz_integral_check(cplx s);

}  // namespace cesaro::zetafns
