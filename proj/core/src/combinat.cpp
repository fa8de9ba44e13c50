#include <boost/math/special_functions/gamma.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

#include "cesaro/combinat.hpp"

namespace cesaro::combinat {

Triangle::Triangle(int rows) {
  if (rows < 1) throw Error(ErrorKind::domain, "triangle: rows < 1", rows);
  // by ascending power first: asc[m-1] is the coefficient of eps^m
  std::vector<BigInt> asc{1};
  for (int n = 1; n <= rows; ++n) {
    if (n > 1) {
      std::vector<BigInt> next(static_cast<size_t>(n));
      for (int m = 1; m <= n; ++m) {
        BigInt above = (m <= n - 1) ? asc[m - 1] : BigInt(0);
        BigInt left = (m >= 2) ? asc[m - 2] : BigInt(0);
        next[m - 1] = m * above + left;
      }
      asc = std::move(next);
    }
    rows_.emplace_back(asc.rbegin(), asc.rend());
  }
}

const std::vector<BigInt>& Triangle::row(int n) const {
  if (n < 1 || n > rows()) throw Error(ErrorKind::range, "Triangle::row: index outside 1..rows", n);
  return rows_[n - 1];
}

BigInt Triangle::entry(int n, int m) const {
  if (n == 0) return m == 0 ? 1 : 0;
  if (m < 1 || m > n) return 0;
  return row(n)[n - m];
}

Triangle triangle(int rows) { return Triangle(rows); }

BigInt alpha_ddalpha_apply(int n, int j) {
  if (n < 0 || j < 0) throw Error(ErrorKind::domain, "alpha_ddalpha_apply: need n, j >= 0");
  if (n == 0) return 1;
  Triangle t(n);
  BigInt acc = 0, falling = 1;
  for (int m = 1; m <= n; ++m) {
    falling *= (j - m + 1);
    acc += t.entry(n, m) * falling;
  }
  return acc;
}

std::vector<cplx> epsilon_series(cplx nu, int terms) {
  if (terms < 1 || terms > 60) throw Error(ErrorKind::domain, "epsilon_series: need 1 <= terms <= 60", terms);
  // Delta^{m-1}[z^{nu-1}](1) = sum_k C(m-1, k) (-1)^{m-1-k} (1 + k)^{nu-1}
  std::vector<cplx> c(static_cast<size_t>(terms));
  for (int m = 1; m <= terms; ++m) {
    cplx acc = 0.0;
    double binom = 1.0;
    for (int k = 0; k < m; ++k) {
      double sign = ((m - 1 - k) % 2 == 0) ? 1.0 : -1.0;
      acc += sign * binom * std::exp((nu - 1.0) * std::log(1.0 + k));
      binom = binom * (m - 1 - k) / (k + 1);
    }
    c[m - 1] = acc / std::tgamma(static_cast<double>(m));
  }
  return c;
}

cplx epsilon_series_apply(cplx nu, int j, int terms) {
  if (j < 0) throw Error(ErrorKind::domain, "epsilon_series_apply: j < 0", j);
  auto c = epsilon_series(nu, terms);
  cplx acc = 0.0;
  double falling = 1.0;
  for (int m = 1; m <= terms && m <= j; ++m) {
    falling *= (j - m + 1);
    acc += c[m - 1] * falling;
  }
  return acc;
}

namespace {

using lcplx = std::complex<long double>;

// log(1 + z) without losing the small real part.
lcplx log1p_c(lcplx z) {
  long double re = 0.5L * std::log1p(2.0L * z.real() + std::norm(z));
  long double im = std::atan2(z.imag(), 1.0L + z.real());
  return {re, im};
}

std::vector<long long> log_spaced(long long lo, long long hi, int count) {
  std::vector<long long> js;
  for (int i = 0; i < count; ++i) {
    double t = static_cast<double>(i) / (count - 1);
    long long j = std::llround(std::exp(std::log(static_cast<double>(lo)) * (1 - t) + std::log(static_cast<double>(hi)) * t));
    if (js.empty() || j > js.back()) js.push_back(j);
  }
  return js;
}

}  // namespace

std::vector<cplx> log_signed_binomial(cplx rho, long long j_max) {
  if (j_max < 1 || j_max > 10'000'000) throw Error(ErrorKind::domain, "log_signed_binomial: j_max outside 1..1e7");
  lcplx x(rho.real() + 1.0L, rho.imag());
  std::vector<cplx> out(static_cast<size_t>(j_max) + 1);
  lcplx sum = 0, comp = 0;
  out[0] = 0.0;
  for (long long i = 1; i <= j_max; ++i) {
    lcplx u = -x / static_cast<long double>(i);
    if (u == lcplx(-1.0L))
      throw Error(ErrorKind::degenerate, "log_signed_binomial: rho is a non-negative integer, C(rho, j) = 0 for large j");
    lcplx term = std::abs(u) < 0.5L ? log1p_c(u) : std::log(1.0L + u);
    lcplx y = term - comp;
    lcplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    out[static_cast<size_t>(i)] = cplx(sum);
  }
  return out;
}

AsymptoticFit binom_asym_fit(cplx rho, long long j_min, long long j_max, int order) {
  if (rho.imag() == 0 && rho.real() >= 0 && rho.real() == std::floor(rho.real()))
    throw Error(ErrorKind::degenerate, "binom_asym_fit: rho is a non-negative integer");
  if (!(j_min >= 10 && j_max <= 1'000'000 && j_max >= 4 * j_min))
    throw Error(ErrorKind::window, "binom_asym_fit: need 10 <= j_min, 4 j_min <= j_max <= 1e6");
  if (order < 0 || order > 8) throw Error(ErrorKind::domain, "binom_asym_fit: order outside 0..8", order);
  auto L = log_signed_binomial(rho, j_max);
  auto js = log_spaced(j_min, j_max, 64);
  auto n = static_cast<Eigen::Index>(js.size());
  cplx x = rho + 1.0;

  Eigen::MatrixXcd A(n, order + 1);
  Eigen::VectorXcd y(n);
  Eigen::MatrixXcd B(n, order + 2);
  Eigen::VectorXcd ly(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    double j = static_cast<double>(js[static_cast<size_t>(r)]);
    lcplx lv(L[static_cast<size_t>(js[static_cast<size_t>(r)])]);
    y(r) = cplx(std::exp(lv + lcplx(x) * std::log(static_cast<long double>(j))));
    ly(r) = cplx(lv);
    double p = 1.0;
    B(r, 0) = std::log(j);
    for (int k = 0; k <= order; ++k, p /= j) {
      A(r, k) = p;
      B(r, k + 1) = p;
    }
  }
  Eigen::VectorXcd c = A.colPivHouseholderQr().solve(y);
  Eigen::VectorXcd e = B.colPivHouseholderQr().solve(ly);
  AsymptoticFit fit;
  fit.C = c(0);
  for (int k = 1; k <= order; ++k) fit.a_coeffs.push_back(c(k) / c(0));
  fit.residual = (A * c - y).cwiseAbs().maxCoeff() / std::abs(c(0));
  fit.exponent = e(0);
  fit.j_min = j_min;
  fit.j_max = j_max;
  return fit;
}

LnBinomCheck ln_binom_expansion_check(double rho, long long j_min, long long j_max) {
  double x = rho + 1.0;
  if (!(x > 0 && x < 1)) throw Error(ErrorKind::domain, "ln_binom_expansion_check: need rho + 1 in (0, 1)");
  if (!(j_min >= 10 && j_max >= 10 * j_min && j_max <= 1'000'000))
    throw Error(ErrorKind::window, "ln_binom_expansion_check: need 10 <= j_min, 10 j_min <= j_max <= 1e6");
  constexpr int K = 8;
  auto js = log_spaced(j_min, j_max, 80);
  auto n = static_cast<Eigen::Index>(js.size());
  Eigen::MatrixXd A(n, K);
  Eigen::VectorXd y(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    double j = static_cast<double>(js[static_cast<size_t>(r)]);
    // ln Gamma(j + 1 - x) - ln Gamma(j + 1) + x ln j
    y(r) = std::log(boost::math::tgamma_delta_ratio(j + 1.0 - x, x)) + x * std::log(j);
    double p = 1.0 / j;
    for (int k = 0; k < K; ++k, p /= j) A(r, k) = p;
  }
  Eigen::VectorXd c = A.colPivHouseholderQr().solve(y);
  if (!c.allFinite()) throw Error(ErrorKind::window, "ln_binom_expansion_check: ill-conditioned fit");

  LnBinomCheck out;
  out.x = x;
  out.c1_fit = c(0);
  out.c2_fit = c(1);
  out.c1_expected = scale::qcheck(1).eval(x) + scale::to_double(scale::zeta_one_minus(2));
  out.c2_expected = (scale::qcheck(2).eval(x) + scale::to_double(scale::zeta_one_minus(3))) / 2.0;
  out.max_deviation = std::max(std::abs(out.c1_fit - out.c1_expected), std::abs(out.c2_fit - out.c2_expected));

  double series = special::euler_gamma * x, xm = x;
  for (int m = 2; m < 400; ++m) {
    xm *= x;
    double term = special::zeta(static_cast<double>(m)).real() * xm / m;
    series += term;
    if (std::abs(term) < 1e-17) break;
  }
  out.constant_series = series;
  out.constant_direct = std::lgamma(1.0 - x);
  return out;
}

const char* to_string(Ray r) {
  switch (r) {
    case Ray::im_pos: return "Im_pos";
    case Ray::re_neg: return "Re_neg";
    case Ray::im_neg: return "Im_neg";
    case Ray::re_pos: return "Re_pos";
  }
  return "?";
}

Ray expected_ray(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "expected_ray: n < 0", n);
  return static_cast<Ray>(n % 4);
}

RayReport ray_behaviour_check(int n, const std::vector<double>& t_grid) {
  if (n < 0 || n > 7) throw Error(ErrorKind::domain, "ray_behaviour_check: need 0 <= n <= 7", n);
  RayReport rep;
  rep.n = n;
  rep.ray = expected_ray(n);
  auto poly = scale::qcheck(n);
  rep.at_half = poly(Rational(1, 2));
  // On alpha = 1/2 + it the value is real iff the shifted polynomial is even,
  // imaginary iff it is odd; the parity follows n + 1.
  auto shifted = poly.shifted(Rational(1, 2));
  bool want_even = (n % 2 == 1);
  rep.exact_parity = true;
  for (int i = 0; i <= shifted.degree(); ++i)
    if ((i % 2 == 0) != want_even && shifted.coeff(i) != 0) rep.exact_parity = false;
  bool imaginary = rep.ray == Ray::im_pos || rep.ray == Ray::im_neg;
  double sign = (rep.ray == Ray::im_pos || rep.ray == Ray::re_pos) ? 1.0 : -1.0;
  for (double t : t_grid) {
    if (!(t >= 0)) throw Error(ErrorKind::domain, "ray_behaviour_check: t < 0");
    RayPoint p;
    p.t = t;
    p.value = poly.eval(cplx(0.5, t));
    double along = imaginary ? p.value.imag() : p.value.real();
    p.off_ray = std::abs(imaginary ? p.value.real() : p.value.imag());
    p.on_ray = along * sign >= 0;
    rep.points.push_back(p);
  }
  return rep;
}

Rational theta_coefficient(int n) {
  if (n < 1) throw Error(ErrorKind::domain, "theta_coefficient: n < 1", n);
  if (n % 2 == 0) return 0;
  int k = (n + 1) / 2;
  Rational b = scale::bernoulli_numbers(2 * k)[2 * k];
  if (b < 0) b = -b;
  Rational two_pow = 1;
  for (int i = 0; i < 2 * k - 1; ++i) two_pow *= 2;
  return (1 - 1 / two_pow) * b / (4 * k * (2 * k - 1));
}

std::vector<ThetaRow> theta_coefficient_check(const std::vector<int>& ns) {
  std::vector<ThetaRow> out;
  for (int n : ns) {
    Rational h = scale::qcheck_at_half(n);
    if (h < 0) h = -h;
    Rational c = theta_coefficient(n);
    out.push_back({n, h, c, h == 2 * n * c});
  }
  return out;
}

}  // namespace cesaro::combinat
