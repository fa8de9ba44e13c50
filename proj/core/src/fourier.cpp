#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <thread>

#include "cesaro/formal.hpp"
#include "cesaro/fourier.hpp"
#include "cesaro/scale.hpp"

namespace cesaro::fourier {

namespace {

constexpr double pi = std::numbers::pi;

bool negative_integer(cplx z) {
  return z.imag() == 0 && z.real() < 0 && z.real() == std::floor(z.real());
}

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

// Adaptive Gauss-Kronrod on the real and imaginary parts of f over [0, 1].
template <class F>
QuadratureValue integrate01(F f, double tol) {
  double err_re = 0, err_im = 0;
  double re = GK::integrate([&](double u) { return f(u).real(); }, 0.0, 1.0, 15, tol, &err_re);
  double im = GK::integrate([&](double u) { return f(u).imag(); }, 0.0, 1.0, 15, tol, &err_im);
  double bound = err_re + err_im;
  double scale = std::max(1.0, std::hypot(re, im));
  return {cplx(re, im), bound, !(bound <= 10 * tol * scale)};
}

}  // namespace

cplx fourier_coeff_closed(cplx rho, long long n) {
  if (negative_integer(rho)) throw Error(ErrorKind::pole, "fourier_coeff_closed: Gamma(rho + 1) pole");
  if (n == 0) return 0.0;
  cplx w(0.0, -2.0 * pi * static_cast<double>(n));
  return special::exp_i_pi(rho) * special::gamma(rho + 1.0) * std::exp(-(rho + 1.0) * std::log(w));
}

QuadratureValue fourier_coeff_quadrature(cplx rho, long long n, double tol) {
  if (!(rho.real() > -1)) throw Error(ErrorKind::domain, "fourier_coeff_quadrature: need Re(rho) > -1");
  if (negative_integer(rho)) throw Error(ErrorKind::pole, "fourier_coeff_quadrature: rho is a negative integer");
  formal::QcheckEvaluator q(rho);
  double w = -2.0 * pi * static_cast<double>(n);
  auto integrand = [&](double a) { return q(a) * std::polar(1.0, w * a); };
  QuadratureValue r;
  bool integer = rho.imag() == 0 && rho.real() == std::floor(rho.real());
  if (integer) {
    r = integrate01(integrand, tol);
  } else {
    // non-integer rho also has a (1 - alpha)^rho kink at alpha = 1
    double p = rho.real() < 0 ? 1.0 / (1.0 + rho.real()) : 2.0;
    r = integrate01(
        [&](double u) {
          double up = std::pow(u, p);
          double jac = p * std::pow(u, p - 1.0);
          double a = 1.0 - up;
          return q.eval_complement(a, up) * std::polar(1.0, w * a) * jac;
        },
        tol);
  }
  return r;
}

CoefficientSet coefficient_set(cplx rho, long long N) {
  if (N < 0) throw Error(ErrorKind::domain, "coefficient_set: N < 0", N);
  if (negative_integer(rho)) throw Error(ErrorKind::pole, "coefficient_set: Gamma(rho + 1) pole");
  std::vector<cplx> pos(static_cast<size_t>(N) + 1), neg(static_cast<size_t>(N) + 1);
  unsigned workers = std::clamp<unsigned>(std::thread::hardware_concurrency(), 1, 8);
  if (N < 1024) workers = 1;
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (long long n = 1 + w; n <= N; n += workers) {
        pos[n] = fourier_coeff_closed(rho, n);
        neg[n] = fourier_coeff_closed(rho, -n);
      }
    }));
  }
  for (auto& j : jobs) j.get();
  CoefficientSet s{rho, {}};
  s.a[0] = 0.0;
  for (long long n = 1; n <= N; ++n) {
    s.a[n] = pos[n];
    s.a[-n] = neg[n];
  }
  return s;
}

Reconstruction reconstruct(cplx rho, double alpha, long long N) {
  if (N < 1) throw Error(ErrorKind::domain, "reconstruct: N < 1", N);
  if (negative_integer(rho)) throw Error(ErrorKind::pole, "reconstruct: Gamma(rho + 1) pole");
  cplx pref = -special::exp_i_pi(rho) * special::gamma(rho + 1.0) * std::exp(-rho * std::log(2.0)) *
              std::exp(-(rho + 1.0) * std::log(pi));
  cplx shift = pi * rho / 2.0;
  cplx sum = 0.0, comp = 0.0;
  for (long long n = N; n >= 1; --n) {
    double nn = static_cast<double>(n);
    double ph = 2.0 * pi * std::fmod(nn * alpha, 1.0);
    cplx term = std::sin(ph + shift) * std::exp(-(rho + 1.0) * std::log(nn));
    cplx y = term - comp;
    cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  Reconstruction r{pref * sum, std::numeric_limits<double>::infinity(), rho.real() <= 0};
  if (!r.conditional) {
    // sum_{n>N} n^{-Re rho - 1} <= N^{-Re rho} / Re rho, |sin| <= cosh(Im shift)
    double tail = std::pow(static_cast<double>(N), -rho.real()) / rho.real();
    r.tail_bound = std::abs(pref) * std::cosh(shift.imag()) * tail;
  }
  return r;
}

cplx functional_equation_residual(cplx s) {
  if (s == cplx(0.0) || s == cplx(1.0)) throw Error(ErrorKind::domain, "functional_equation_residual: s in {0, 1}");
  if (s.imag() == 0 && s.real() == std::floor(s.real())) {
    double m = s.real();
    if (m < 0 && std::fmod(-m, 2.0) == 0) return special::zeta(s);  // sin(pi s / 2) = 0 against a trivial zero
    if (m >= 2) throw Error(ErrorKind::indeterminate, "functional_equation_residual: Gamma(1 - s) pole on the right");
  }
  cplx rhs = std::exp(s * std::log(2.0)) * std::exp((s - 1.0) * std::log(pi)) * std::sin(pi * s / 2.0) *
             special::gamma(1.0 - s) * special::zeta(1.0 - s);
  return special::zeta(s) - rhs;
}

DiagnosticReport singular_limit_diagnostic(cplx rho, const std::vector<double>& alpha_grid) {
  if (!(rho.real() > -1 && rho.real() < 0))
    throw Error(ErrorKind::domain, "singular_limit_diagnostic: need Re(rho) in (-1, 0)");
  formal::QcheckEvaluator q(rho);
  cplx phase = special::exp_i_pi(rho);
  cplx c = special::rgamma(-rho);
  DiagnosticReport rep{rho, {}};
  for (double a : alpha_grid) {
    if (!(a > 0 && a < 1)) throw Error(ErrorKind::domain, "singular_limit_diagnostic: alpha outside (0, 1)");
    DiagnosticRow row;
    row.alpha = a;
    row.value = q(a);
    cplx divergent = phase * std::exp(rho * std::log(1.0 - a));
    cplx kept = 0.0, binom = 1.0, apow = 1.0;
    for (int j = 0; j - rho.real() <= 1; ++j) {
      kept += binom * apow * (special::zeta(static_cast<double>(j) - rho) - 1.0);
      binom *= -(rho - static_cast<double>(j)) / static_cast<double>(j + 1);
      apow *= a;
    }
    row.model = divergent + phase * kept;
    row.difference = row.value - row.model;
    row.full_replacement_difference = row.value - divergent;
    row.polylog_model = phase * c * special::polylog(rho + 1.0, a);
    row.ratio = row.value / row.polylog_model;
    row.divergent_ratio = divergent / row.polylog_model;
    rep.rows.push_back(row);
  }
  return rep;
}

ParsevalCheck parseval(int m, long long N) {
  if (m < 0 || m > 12) throw Error(ErrorKind::domain, "parseval: need 0 <= m <= 12", m);
  if (N < 1) throw Error(ErrorKind::domain, "parseval: N < 1", N);
  // |a_n|^2 = (m!)^2 / (2 pi |n|)^{2m+2}
  double fact = std::tgamma(m + 1.0);
  double sum = 0;
  for (long long n = N; n >= 1; --n) sum += 2.0 * fact * fact / std::pow(2.0 * pi * static_cast<double>(n), 2 * m + 2);
  // integral_0^1 q_m^2 from the rational coefficients
  auto c = scale::qcheck_coeffs(m);
  double exact = 0;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) exact += c[i] * c[j] / static_cast<double>(i + j + 1);
  return {sum, exact};
}

std::vector<ShiftProbe> shifted_integral_probe(cplx rho, long long n, int k_max) {
  if (k_max < 0 || k_max > 30) throw Error(ErrorKind::domain, "shifted_integral_probe: need 0 <= k_max <= 30", k_max);
  std::vector<ShiftProbe> out;
  for (int k = 0; k <= k_max; ++k) {
    cplx r = rho + static_cast<double>(k);
    if (!(r.real() > -1)) continue;
    out.push_back({k, fourier_coeff_quadrature(r, n).value, fourier_coeff_closed(r, n)});
  }
  return out;
}

}  // namespace cesaro::fourier
