#pragma once

#include <map>
#include <vector>

#include "cesaro/special.hpp"

namespace cesaro::fourier {

// a_n(rho) = e^{i pi rho} Gamma(rho + 1) / (-2 pi i n)^{rho + 1}, a_0 = 0.
cplx fourier_coeff_closed(cplx rho, long long n);

struct QuadratureValue {
  cplx value;
  double error_bound;
  bool accuracy_warning;  // requested accuracy not reached
};

// integral_0^1 q-check_rho(alpha) e^{-2 pi i n alpha} d alpha by adaptive
// Gauss-Kronrod; for Re(rho) < 0 the variable alpha = 1 - u^{1/(1 + Re rho)}
// removes the endpoint growth.
QuadratureValue fourier_coeff_quadrature(cplx rho, long long n, double tol = 1e-12);

struct CoefficientSet {
  cplx rho;
  std::map<long long, cplx> a;  // |n| <= N
};
CoefficientSet coefficient_set(cplx rho, long long N);

struct Reconstruction {
  cplx value;
  double tail_bound;     // infinite when Re(rho) <= 0
  bool conditional;      // Re(rho) <= 0: no tail guarantee
};
// -(e^{i pi rho} Gamma(rho + 1) / (2^rho pi^{rho + 1})) sum_{n<=N} sin(2 pi n alpha + pi rho / 2) / n^{rho + 1}
Reconstruction reconstruct(cplx rho, double alpha, long long N);

// zeta(s) - 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s).
cplx functional_equation_residual(cplx s);

struct DiagnosticRow {
  double alpha;
  cplx value;  // q-check_rho(alpha)
  // zeta(j - rho) replaced by 1 wherever j - Re(rho) > 1; the few terms below
  // that keep their zeta value
  cplx model;
  cplx difference;              // value - model
  cplx full_replacement_difference;  // value - e^{i pi rho} (1 - alpha)^rho (every j replaced)
  cplx polylog_model;           // e^{i pi rho} Li_{rho+1}(alpha) / Gamma(-rho)
  cplx ratio;                   // value / polylog_model
  cplx divergent_ratio;         // e^{i pi rho} (1 - alpha)^rho / polylog_model
};
struct DiagnosticReport {
  cplx rho;
  std::vector<DiagnosticRow> rows;
};
DiagnosticReport singular_limit_diagnostic(cplx rho, const std::vector<double>& alpha_grid);

// sum_{|n|<=N} |a_n(rho)|^2 against integral_0^1 |q-check_n|^2 for integer rho = m >= 0.
struct ParsevalCheck {
  double partial_sum;
  double exact;
};
ParsevalCheck parseval(int m, long long N);

// integral_0^1 q-check_{rho+k}(alpha) e^{-2 pi i n alpha} d alpha for moderate k,
// next to the closed form; exposed for inspection only.
struct ShiftProbe {
  int k;
  cplx quadrature;
  cplx closed;
};
std::vector<ShiftProbe> shifted_integral_probe(cplx rho, long long n, int k_max);

}  // namespace cesaro::fourier
