#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cesaro/averaging.hpp"

namespace cesaro::summation {

size_t GridFunction::per_unit() const { return static_cast<size_t>(std::llround(1.0 / step)); }

cplx GridFunction::at(double X) const {
  double idx = X / step;
  if (idx < 0 || idx != std::floor(idx) || static_cast<size_t>(idx) >= samples.size())
    throw Error(ErrorKind::range, "GridFunction::at: X is not a grid point");
  return samples[static_cast<size_t>(idx)];
}

GridFunction make_grid(double x_max, double step, cplx z0) {
  int e = 0;
  double mant = std::frexp(step, &e);
  if (!(step > 0) || mant != 0.5 || step > 0.5)
    throw Error(ErrorKind::domain, "make_grid: step must be 1/2^m with m >= 1");
  if (!(x_max >= 1) || x_max != std::floor(x_max) || x_max > 1e7)
    throw Error(ErrorKind::domain, "make_grid: x_max must be a positive integer");
  GridFunction g;
  g.x_max = x_max;
  g.step = step;
  g.z0 = z0;
  g.samples.assign(static_cast<size_t>(std::llround(x_max / step)) + 1, 0.0);
  return g;
}

namespace {

void check_finite(const GridFunction& f) {
  for (size_t i = 0; i < f.samples.size(); ++i)
    if (!std::isfinite(f.samples[i].real()) || !std::isfinite(f.samples[i].imag()))
      throw Error(ErrorKind::propagation, "apply_P_numeric: non-finite sample", static_cast<long long>(i));
}

// Cumulative integral from 0 at every grid point. Pairs of steps never straddle
// an integer, so Simpson only sees the smooth pieces of a step function.
std::vector<cplx> cumulative(const GridFunction& f) {
  const auto& s = f.samples;
  size_t N = s.size() - 1, per = f.per_unit();
  double h = f.step;
  std::vector<cplx> F(s.size(), 0.0);
  auto right_end = [&](size_t i) -> cplx {
    if (!f.left.empty() && i % per == 0) return f.left[i / per];
    return s[i];
  };
  size_t start = 0;
  if (s[0] == cplx(0.0) && s[1] != cplx(0.0) && s[2] != cplx(0.0)) {
    // f ~ c x^beta near 0: integrate the first pair from the fitted power.
    cplx beta = std::log(s[2] / s[1]) / std::log(2.0);
    if (beta.real() > -0.999 && std::abs(beta) < 20) {
      F[1] = s[1] * h / (beta + 1.0);
      F[2] = right_end(2) * 2.0 * h / (beta + 1.0);
      start = 2;
    }
  }
  for (size_t i = start; i + 2 <= N; i += 2) {
    cplx f0 = s[i], f1 = s[i + 1], f2 = right_end(i + 2);
    F[i + 1] = F[i] + h * (5.0 * f0 + 8.0 * f1 - f2) / 12.0;
    F[i + 2] = F[i] + h * (f0 + 4.0 * f1 + f2) / 3.0;
  }
  return F;
}

GridFunction one_pass(const GridFunction& f, bool use_exact) {
  std::vector<cplx> F = (use_exact && f.exact_cumulative) ? *f.exact_cumulative : cumulative(f);
  GridFunction g;
  g.x_max = f.x_max;
  g.step = f.step;
  g.z0 = f.z0;
  g.samples.resize(f.samples.size());
  g.samples[0] = (f.z0 == cplx(0.0)) ? f.samples[0] : cplx(0.0);
  for (size_t i = 1; i < F.size(); ++i) g.samples[i] = F[i] / (f.z0 + static_cast<double>(i) * f.step);
  return g;
}

}  // namespace

GridFunction apply_P_numeric(const GridFunction& f, int repetitions) {
  if (repetitions < 1) throw Error(ErrorKind::domain, "apply_P_numeric: repetitions < 1", repetitions);
  if (f.samples.size() < 3) throw Error(ErrorKind::domain, "apply_P_numeric: grid too small");
  check_finite(f);
  GridFunction g = one_pass(f, true);
  for (int r = 1; r < repetitions; ++r) g = one_pass(g, false);
  return g;
}

GridFunction apply_operator(const OperatorPolynomial& op, const GridFunction& f) {
  const auto& c = op.coeffs();
  GridFunction out = f;
  out.exact_cumulative.reset();
  for (auto& v : out.samples) v *= c[0];
  for (auto& v : out.left) v *= c[0];
  size_t per = f.per_unit();
  GridFunction g = f;
  for (size_t i = 1; i < c.size(); ++i) {
    g = apply_P_numeric(g, 1);
    if (c[i] == cplx(0.0)) continue;
    for (size_t k = 0; k < out.samples.size(); ++k) out.samples[k] += c[i] * g.samples[k];
    for (size_t n = 0; n < out.left.size(); ++n) out.left[n] += c[i] * g.samples[n * per];
  }
  if (c[0] == cplx(0.0)) out.left.clear();
  return out;
}

namespace {

// Least squares for v = a + sum_{m<=M} b_m (ln X - ln X_max)^m / X; returns a
// and the largest residual.
std::pair<cplx, double> log_fit(const std::vector<double>& X, const std::vector<cplx>& v, int M, double x_max) {
  Eigen::MatrixXcd A(static_cast<Eigen::Index>(X.size()), M + 2);
  Eigen::VectorXcd y(static_cast<Eigen::Index>(X.size()));
  for (size_t i = 0; i < X.size(); ++i) {
    auto r = static_cast<Eigen::Index>(i);
    double L = std::log(X[i] / x_max);
    A(r, 0) = 1.0;
    double Lm = 1.0;
    // scaled by x_max so the columns are of order one
    for (int m = 0; m <= M; ++m, Lm *= L) A(r, m + 1) = Lm * x_max / X[i];
    y(r) = v[i];
  }
  Eigen::VectorXcd c = A.colPivHouseholderQr().solve(y);
  double resid = (A * c - y).cwiseAbs().maxCoeff();
  return {c(0), resid};
}

}  // namespace

LimitEstimate cesaro_limit(const GridFunction& f, const OperatorPolynomial& op, const LimitOptions& opt) {
  if (!op.regular(1e-12)) throw Error(ErrorKind::contract, "cesaro_limit: operator is not regular at P = 1");
  OperatorPolynomial full = op * OperatorPolynomial::power(std::max(0, opt.extra_smoothing));
  int M = opt.log_powers.value_or(std::clamp(full.degree() - 1, 0, 6));
  if (M < 0 || M > 8) throw Error(ErrorKind::domain, "cesaro_limit: log_powers outside 0..8", M);
  if (!(opt.window_start > 0 && opt.window_start < opt.check_window_start && opt.check_window_start < 1))
    throw Error(ErrorKind::domain, "cesaro_limit: need 0 < window_start < check_window_start < 1");
  GridFunction g = apply_operator(full, f);
  size_t per = f.per_unit();
  size_t stride = std::max<size_t>(1, per / 8);
  // P is causal, so the samples up to x_max/2 are what a run with half the
  // horizon would have produced; the spread against that run enters the estimate.
  auto fit_from = [&](double start, double end) {
    size_t first = std::max<size_t>(static_cast<size_t>(std::ceil(end * start)), 1) * per;
    size_t last = static_cast<size_t>(std::llround(end / f.step));
    std::vector<double> X;
    std::vector<cplx> v;
    for (size_t i = first; i <= last && i < g.size(); i += stride) {
      X.push_back(static_cast<double>(i) * f.step);
      v.push_back(g.samples[i]);
    }
    if (X.size() < static_cast<size_t>(M) + 8)
      throw Error(ErrorKind::resolution, "cesaro_limit: too few samples in the fit window");
    return log_fit(X, v, M, end);
  };
  auto [a, resid] = fit_from(opt.window_start, f.x_max);
  cplx a_check = fit_from(opt.check_window_start, f.x_max).first;
  cplx a_half = fit_from(opt.window_start, std::floor(f.x_max / 2)).first;
  if (!std::isfinite(std::abs(a)) || resid > opt.tol) {
    std::ostringstream os;
    os << "cesaro_limit: fit residual " << resid << " exceeds " << opt.tol;
    throw Error(ErrorKind::no_limit, os.str());
  }
  return {a, std::abs(a - a_check) + 2.0 * std::abs(a - a_half) + resid, resid};
}

LimitEstimate cesaro_limit(const TermSum& f, const OperatorPolynomial& op, double x_max, double step,
                           const LimitOptions& opt) {
  return cesaro_limit(sample(f, x_max, step), op, opt);
}

namespace {

constexpr double kProbe[3] = {10.25, 25.5, 50.75};

GridFunction sample_scaled(int power, int r, double step) {
  auto c = scale::qcheck_coeffs(r);
  return sample(
      [&](double X, bool left) -> cplx {
        double a = X - std::floor(X);
        if (left && X >= 1) a = 1.0;
        return std::pow(X, power) * scale::horner(c, a);
      },
      52.0, step);
}

OperatorPolynomial falling(int from, int to) {
  OperatorPolynomial q;
  for (int i = from; i <= to; ++i) q = q * OperatorPolynomial::linear(Rational(1), Rational(1, i));
  return q;
}

double max_dev(const GridFunction& a, const GridFunction& b, int n, double step, double tol) {
  double dev = 0;
  for (double X : kProbe) dev = std::max(dev, std::abs(a.at(X) - b.at(X)));
  if (dev > tol) {
    std::ostringstream os;
    os << "identity deviation " << dev << " at step " << step << "; retry with step " << step / 4;
    throw Error(ErrorKind::resolution, os.str(), n);
  }
  return dev;
}

}  // namespace

double pn_identity_numeric(int n, int r, double step, double tol) {
  if (n < 0 || n > 3 || r < 0 || r > 3) throw Error(ErrorKind::domain, "pn_identity_numeric: need 0 <= n, r <= 3");
  GridFunction lhs = sample_scaled(n, r, step);
  if (n > 0) lhs = apply_P_numeric(lhs, n);
  double binom = 1;
  for (int i = 1; i <= n; ++i) binom = binom * (r + i) / i;
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  OperatorPolynomial op = falling(1, n) * OperatorPolynomial(std::vector<cplx>{sign / binom});
  GridFunction rhs = apply_operator(op, sample_scaled(0, r + n, step));
  return max_dev(lhs, rhs, n, step, tol);
}

double xq_identity_numeric(int n, double step, double tol) {
  if (n < 0 || n > 3) throw Error(ErrorKind::domain, "xq_identity_numeric: need 0 <= n <= 3");
  GridFunction lhs = apply_P_numeric(sample(x_minus_qcheck_power(n), 52.0, step), n + 1);
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  OperatorPolynomial op = falling(2, n + 1) * OperatorPolynomial::power(1) *
                          OperatorPolynomial(std::vector<cplx>{sign * (n + 1)});
  GridFunction rhs = apply_operator(op, sample_scaled(0, n, step));
  return max_dev(lhs, rhs, n, step, tol);
}

}  // namespace cesaro::summation
