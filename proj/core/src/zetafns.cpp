#include "cesaro/zetafns.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

#include "cesaro/formal.hpp"

namespace cesaro::zetafns {

using special::cpow;
using summation::GridFunction;
using summation::Term;
using summation::TermSum;

namespace {

struct Kahan {
  cplx sum = 0, c = 0;
  void add(cplx v) {
    cplx y = v - c;
    cplx t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

cplx summand(cplx z0, cplx s, long long j) {
  cplx base = z0 + static_cast<double>(j);
  if (base == cplx(0.0)) {
    if (s.real() < 0) return 0.0;
    throw Error(ErrorKind::pole, "p-sum: summand (z0 + j)^{-s} has z0 + j = 0", j);
  }
  return cpow(base, -s);
}

// zeta(s) - 1, summed directly where zeta is within rounding of 1.
cplx zeta_minus_one(cplx s) {
  if (s.real() < 12) return special::zeta(s) - 1.0;
  cplx acc = 0;
  for (int n = 2; n < 200; ++n) {
    cplx t = std::exp(-s * std::log(static_cast<double>(n)));
    acc += t;
    if (std::abs(t) < 1e-20 * std::abs(acc)) break;
  }
  return acc;
}

bool nonpositive_integer(cplx s, long long& n) {
  auto v = special::as_integer(s, 0.0);
  if (!v || *v > 0) return false;
  n = -*v;
  return true;
}

struct TaylorRest {
  cplx value;
  double last;
  int terms;
};

// sum_j C(-s, j) (zeta(s + j) - 1) z0^j
TaylorRest taylor_rest(cplx z0, cplx s) {
  cplx acc = 0, c = 1.0, zp = 1.0;
  double last = 0;
  int j = 0;
  for (; j < 4000; ++j) {
    cplx t = c * zeta_minus_one(s + static_cast<double>(j)) * zp;
    acc += t;
    last = std::abs(t);
    if (j >= 5 && last < 1e-18 * (1.0 + std::abs(acc))) break;
    c *= (-s - static_cast<double>(j)) / static_cast<double>(j + 1);
    zp *= z0;
  }
  return {acc, last, j};
}

}  // namespace

cplx psum_eval(cplx z0, cplx s, double X) {
  if (!(X >= 0) || !std::isfinite(X)) throw Error(ErrorKind::domain, "psum_eval: X must be finite and >= 0");
  auto k = static_cast<long long>(std::floor(X));
  Kahan acc;
  for (long long j = 1; j <= k; ++j) acc.add(summand(z0, s, j));
  return acc.sum;
}

GridFunction PSum::remainder_grid(double x_max, double step) const {
  if (std::abs(s - 1.0) < 1e-14) throw Error(ErrorKind::pole, "PSum: s = 1 has a logarithmic leading term");
  if (std::abs(s - 2.0) < 1e-14) throw Error(ErrorKind::degenerate, "PSum: s = 2 makes the leading antiderivative singular");
  GridFunction g = summation::make_grid(x_max, step, z0);
  size_t per = g.per_unit();
  auto units = static_cast<size_t>(x_max);
  g.left.assign(units + 1, 0.0);
  std::vector<cplx> F(g.size());
  auto lead = [&](double X) -> cplx {
    cplx z = z0 + X;
    return z == cplx(0.0) ? cplx(0.0) : cpow(z, 1.0 - s) / (1.0 - s);
  };
  auto lead_int = [&](double X) -> cplx {
    cplx z = z0 + X;
    cplx v = (z == cplx(0.0)) ? cplx(0.0) : cpow(z, 2.0 - s);
    cplx v0 = (z0 == cplx(0.0)) ? cplx(0.0) : cpow(z0, 2.0 - s);
    return (v - v0) / ((1.0 - s) * (2.0 - s));
  };
  Kahan S, done;  // current step value, integral up to the last integer
  for (size_t i = 0; i < g.size(); ++i) {
    double X = static_cast<double>(i) * step;
    size_t k = i / per;
    if (i % per == 0 && k > 0) {
      done.add(S.sum);
      g.left[k] = S.sum - lead(X);
      S.add(summand(z0, s, static_cast<long long>(k)));
    }
    g.samples[i] = S.sum - lead(X);
    F[i] = done.sum + S.sum * (X - static_cast<double>(k)) - lead_int(X);
  }
  g.left[0] = g.samples[0];
  g.exact_cumulative = std::move(F);
  return g;
}

TermSum psum_term_expansion(cplx s, int J) {
  if (std::abs(s - 1.0) < 1e-14) throw Error(ErrorKind::pole, "psum_term_expansion: s = 1");
  if (J < 0) throw Error(ErrorKind::domain, "psum_term_expansion: J < 0", J);
  TermSum out;
  out.add(Term{1.0 / (1.0 - s), 1.0 - s, -1, false, false});
  out.add(Term{special::zeta(s), 0.0, -1, false, false});
  cplx c = 1.0;  // C(-s, j)
  for (int j = 0; j <= J; ++j) {
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    if (c != cplx(0.0)) out.add(Term{-sign * c, -s - static_cast<double>(j), j, false, false});
    c *= (-s - static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return out;
}

int psum_expansion_order(cplx s, double X, double tol) {
  long long n;
  if (nonpositive_integer(s, n)) return static_cast<int>(n);
  // |q-check_j| <= 2 j! zeta(j+1) / (2 pi)^{j+1}
  cplx c = 1.0;
  double fact_over = 1.0 / (2 * special::pi);  // j! / (2 pi)^{j+1}
  for (int j = 0; j < 200; ++j) {
    double bound = std::abs(c) * std::pow(X, -s.real() - j) * 2.0 * 1.2020569 * fact_over;
    if (j > 0 && bound < tol) return j;
    c *= (-s - static_cast<double>(j)) / static_cast<double>(j + 1);
    fact_over *= (j + 1) / (2 * special::pi);
  }
  return 200;
}

cplx EMApproximation::classical_value() const {
  cplx acc = integral_part + constant_part;
  for (auto t : classical) acc += t;
  return acc;
}

cplx EMApproximation::compact_value() const {
  cplx acc = integral_part + constant_part;
  for (auto t : compact) acc += t;
  return acc;
}

namespace {

void em_terms(const EMFunction& f, double k, int M, std::vector<cplx>& classical, std::vector<cplx>& compact) {
  auto B = scale::bernoulli_numbers(2 * M + 1);
  classical.clear();
  compact.clear();
  double fact = 1.0;  // r!
  for (int r = 0; r <= 2 * M; ++r) {
    if (r > 0) fact *= r;
    cplx d = f.derivative(k, r);
    double b = scale::to_double(B[static_cast<size_t>(r + 1)]);
    // B_1 enters the sum with the convention +f(k)/2
    if (r == 0) b = 0.5;
    classical.push_back(b / (fact * (r + 1)) * d);
    compact.push_back(-special::zeta(-static_cast<double>(r)).real() / fact * d);
  }
}

}  // namespace

EMApproximation euler_maclaurin(const EMFunction& f, long long k, int M, long long anchor) {
  if (M < 0) throw Error(ErrorKind::domain, "euler_maclaurin: M < 0", M);
  if (k < 1) throw Error(ErrorKind::domain, "euler_maclaurin: k < 1", k);
  if (!f.derivative || !f.antiderivative) throw Error(ErrorKind::contract, "euler_maclaurin: f and F are required");
  if (f.max_order < 2 * M)
    throw Error(ErrorKind::contract, "euler_maclaurin: derivatives needed up to order 2M", 2 * M);
  EMApproximation out;
  out.M = M;
  out.k = k;
  out.anchor = anchor > 0 ? anchor : std::max<long long>(k, 100);
  auto K = static_cast<double>(out.anchor);
  Kahan direct;
  for (long long n = 1; n <= out.anchor; ++n) direct.add(f.derivative(static_cast<double>(n), 0));
  std::vector<cplx> cl, co;
  em_terms(f, K, M, cl, co);
  cplx rest = f.antiderivative(K);
  for (auto t : cl) rest += t;
  out.constant_part = direct.sum - rest;
  out.integral_part = f.antiderivative(static_cast<double>(k));
  em_terms(f, static_cast<double>(k), M, out.classical, out.compact);
  return out;
}

RouteValue hurwitz_taylor(cplx z0, cplx s) {
  if (std::abs(s - 1.0) < 1e-14) throw Error(ErrorKind::pole, "hurwitz_taylor: s = 1");
  double r = std::abs(z0);
  if (r > 1.0 + 1e-15)
    throw Error(ErrorKind::domain, "hurwitz_taylor: |z0| > 1; use the asymptotic route");
  long long n;
  if (nonpositive_integer(s, n)) {
    // sum_{j=0}^{n} C(n, j) zeta(j - n) z0^j - z0^{n+1}/(n+1)
    cplx acc = 0, zp = 1.0;
    double c = 1.0;
    for (long long j = 0; j <= n; ++j) {
      acc += c * special::zeta(static_cast<double>(j - n)) * zp;
      zp *= z0;
      c = c * static_cast<double>(n - j) / static_cast<double>(j + 1);
    }
    acc -= zp / static_cast<double>(n + 1);
    return {acc, 1e-15 * (1.0 + std::abs(acc)), "taylor", static_cast<int>(n) + 2};
  }
  cplx head = summand(z0, s, 1);
  auto [acc, last, j] = taylor_rest(z0, s);
  // tail: terms shrink at least like (|z0|/2)^j once j > |s|
  double q = r / 2;
  double tail = last * q / (1 - q);
  return {head + acc, tail + 1e-15 * std::abs(head + acc), "taylor", j + 2};
}

RouteValue hurwitz_cesaro(cplx z0, cplx s, double x_max, double step) {
  if (s.real() > 1) throw Error(ErrorKind::domain, "hurwitz_cesaro: Re(s) > 1 has no divergent leading term to remove");
  if (std::abs(s - 1.0) < 1e-14) throw Error(ErrorKind::pole, "hurwitz_cesaro: s = 1");
  PSum p{z0, s};
  auto est = summation::cesaro_limit(p.remainder_grid(x_max, step),
                                     summation::regular_poly(s, summation::Mode::theorem2));
  return {est.estimate, est.error_estimate, "cesaro", 0};
}

RouteValue hurwitz_asymptotic(cplx z0, cplx s) {
  if (std::abs(s - 1.0) < 1e-14) throw Error(ErrorKind::pole, "hurwitz_asymptotic: s = 1");
  constexpr double kTarget = 20;
  constexpr long long kJ = 16;
  long long shift = 0;
  while (std::abs(z0 + static_cast<double>(shift)) < kTarget) ++shift;
  Kahan acc;
  for (long long j = 1; j <= shift; ++j) acc.add(summand(z0, s, j));
  cplx z = z0 + static_cast<double>(shift);
  cplx tail;
  double last;
  auto si = special::as_integer(s, 0.0);
  if (si && *si > 0) {
    // -s is a negative integer: the binomial fabric is undefined, so use the
    // resolved coefficients directly.
    tail = -cpow(z, 1.0 - s) / (1.0 - s);
    cplx c = 1.0;
    for (long long j = 0; j <= kJ; ++j) {
      cplx t = c * special::zeta(-static_cast<double>(j)) * cpow(z, -s - static_cast<double>(j));
      tail += t;
      last = std::abs(t);
      c *= (-s - static_cast<double>(j)) / static_cast<double>(j + 1);
    }
  } else {
    auto series = formal::expand_binomial(formal::Subject::k, -s, -1, kJ);
    tail = formal::evaluate(series, z);
    last = std::abs(formal::coefficient_at(series, kJ) * cpow(z, -s - static_cast<double>(kJ)));
  }
  cplx v = acc.sum + tail;
  return {v, last + 1e-15 * std::abs(v), "asymptotic", static_cast<int>(kJ) + 2};
}

RouteValue hurwitz(cplx z0, cplx s) {
  if (std::abs(z0) <= 1.0) return hurwitz_taylor(z0, s);
  return hurwitz_asymptotic(z0, s);
}

RouteValue hurwitz_integral_check(cplx s) {
  if (s.real() >= 1) throw Error(ErrorKind::domain, "hurwitz_integral_check: Re(s) >= 1 is not integrable at z0 = -1");
  // integral of (1 + z0)^{-s} over [-1, 0] is 1/(1 - s); the rest is smooth.
  long long n;
  bool finite = nonpositive_integer(s, n);
  cplx head = finite ? cplx(0.0) : 1.0 / (1.0 - s);
  auto f = [&](double x) -> cplx { return finite ? hurwitz_taylor(x, s).value : taylor_rest(x, s).value; };
  double err = 0;
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto re = GK::integrate([&](double x) { return f(x).real(); }, -1.0, 0.0, 8, 1e-13, &err);
  double err_im = 0;
  auto im = GK::integrate([&](double x) { return f(x).imag(); }, -1.0, 0.0, 8, 1e-13, &err_im);
  cplx v = head + cplx(re, im);
  return {v, err + err_im, "integral", 0};
}

}  // namespace cesaro::zetafns
