#pragma once

#include <string>
#include <vector>

#include "cesaro/scale.hpp"

namespace cesaro::combinat {

using scale::BigInt;
using scale::Rational;

// Coefficients of (alpha d/dalpha)^n in the basis eps^m = alpha^m (d/dalpha)^m.
// Row n (n >= 1) is stored left to right as the coefficients of eps^n .. eps^1.
class Triangle {
public:
  explicit Triangle(int rows);
  int rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<BigInt>& row(int n) const;  // 1-based
  // Coefficient of eps^m in row n; 0 outside 1 <= m <= n. entry(0, 0) = 1.
  BigInt entry(int n, int m) const;

private:
  std::vector<std::vector<BigInt>> rows_;
};

Triangle triangle(int rows);

// sum_m entry(n, m) j (j-1) ... (j-m+1), which should be j^n.
BigInt alpha_ddalpha_apply(int n, int j);

// Truncated eps-series of (alpha d/dalpha)^nu: c_m = Delta^{m-1}[z^{nu-1}](1)/(m-1)!
// for m = 1..terms. Finite for integer nu; an experiment otherwise.
std::vector<cplx> epsilon_series(cplx nu, int terms);
// The truncated series applied to alpha^j, read at alpha = 1.
cplx epsilon_series_apply(cplx nu, int j, int terms);

// (-1)^j C(rho, j) = prod_{i<=j} (1 - (rho + 1)/i) in log form, indexed by
// j = 0..j_max (entry 0 is ln 1 = 0), phase unwrapped continuously in j.
std::vector<cplx> log_signed_binomial(cplx rho, long long j_max);

struct AsymptoticFit {
  cplx C;
  std::vector<cplx> a_coeffs;  // a_1, a_2, ...
  double residual = 0;         // largest relative misfit in the window
  cplx exponent;               // slope of ln((-1)^j C(rho, j)) against ln j
  long long j_min = 0, j_max = 0;
};

// C(rho, j) = (-1)^j C j^{-rho-1} (1 + a_1/j + a_2/j^2 + ...), fitted by least
// squares on log-spaced j in [j_min, j_max] with `order` correction terms.
AsymptoticFit binom_asym_fit(cplx rho, long long j_min, long long j_max, int order = 4);

struct LnBinomCheck {
  double x = 0;  // rho + 1
  double c1_fit = 0, c2_fit = 0;
  double c1_expected = 0, c2_expected = 0;  // (q-check_m(x) + zeta(-m))/m
  double max_deviation = 0;
  double constant_series = 0;  // gamma x + sum_{m>=2} zeta(m) x^m / m
  double constant_direct = 0;  // ln Gamma(1 - x)
};

// Coefficients of j^{-1}, j^{-2} in ln C(rho, j) + (rho + 1) ln j - i pi j - const,
// for real rho with rho + 1 in (0, 1).
LnBinomCheck ln_binom_expansion_check(double rho, long long j_min = 20, long long j_max = 2000);

enum class Ray { im_pos, re_neg, im_neg, re_pos };
const char* to_string(Ray r);
Ray expected_ray(int n);

struct RayPoint {
  double t;
  cplx value;
  double off_ray;  // component orthogonal to the expected axis
  bool on_ray;     // sign along the axis matches (or the value is 0)
};
struct RayReport {
  int n = 0;
  Ray ray = Ray::im_pos;
  bool exact_parity = false;  // q-check_n(1/2 + b) is even or odd in b as needed
  Rational at_half;
  std::vector<RayPoint> points;
};
RayReport ray_behaviour_check(int n, const std::vector<double>& t_grid);

// Coefficient of T^{-n} in the large-T expansion of theta(T), n odd:
// (1 - 2^{1-2k}) |B_{2k}| / (4k (2k - 1)) with n = 2k - 1; 0 for even n.
Rational theta_coefficient(int n);

struct ThetaRow {
  int n;
  Rational qcheck_half;  // |q-check_n(1/2)|
  Rational theta_coeff;
  bool match;            // |q-check_n(1/2)| == 2n coeff
};
std::vector<ThetaRow> theta_coefficient_check(const std::vector<int>& ns = {1, 3, 5});

}  // namespace cesaro::combinat
