#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <complex>

#include "cesaro/averaging.hpp"

namespace cesaro::summation {

namespace {

using GL = boost::math::quadrature::gauss<double, 20>;

bool close(cplx a, cplx b) { return std::abs(a - b) <= 1e-14 * (1.0 + std::abs(a)); }

cplx xpow(double X, cplx d) {
  if (d == cplx(0.0)) return 1.0;
  if (X > 0) return std::exp(d * std::log(X));
  if (d.real() > 0) return 0.0;
  throw Error(ErrorKind::domain, "TermSum: X^delta at X = 0 with Re(delta) <= 0");
}

// Periodic factor as a polynomial in alpha, including the shift.
std::vector<double> factor_poly(const Term& t) {
  if (t.scale_index < 0) return {1.0};
  auto c = scale::qcheck_coeffs(t.scale_index);
  if (t.shifted) c[0] = 0.0;
  return c;
}

// integral_n^{n+u} x^delta S(x - n) dx for 0 <= u <= 1.
cplx unit_integral(const Term& t, const std::vector<double>& S, long long n, double u) {
  if (u <= 0) return 0.0;
  if (n == 0) {
    cplx acc = 0;
    for (size_t k = 0; k < S.size(); ++k) {
      if (S[k] == 0) continue;
      cplx e = t.x_power + static_cast<double>(k) + 1.0;
      if (e.real() <= 0)
        throw Error(ErrorKind::domain, "TermSum: residual integrand not integrable at 0", static_cast<long long>(k));
      acc += S[k] * xpow(u, e) / e;
    }
    return acc;
  }
  double base = static_cast<double>(n);
  auto f = [&](double x) -> cplx { return xpow(base + x, t.x_power) * scale::horner(S, x); };
  return GL::integrate(f, 0.0, u);
}

using lcplx = std::complex<long double>;

// Explicit terms are evaluated in extended precision: p-sum expansions cancel
// terms of size X^{1-s} down to O(1).
lcplx eval_term(const Term& t, double X, bool left) {
  if (!(X >= 0) || !std::isfinite(X)) throw Error(ErrorKind::domain, "TermSum: X must be finite and >= 0");
  auto S = factor_poly(t);
  if (t.residual) {
    if (X == 0) throw Error(ErrorKind::domain, "TermSum: residual term at X = 0");
    long long units = static_cast<long long>(std::floor(X));
    cplx acc = 0;
    for (long long n = 0; n < units; ++n) acc += unit_integral(t, S, n, 1.0);
    acc += unit_integral(t, S, units, X - static_cast<double>(units));
    return lcplx(t.coeff * acc / X);
  }
  if (X == 0 && t.shifted && t.x_power.real() <= 0) {
    // X^delta (q_r(X) - q_r(0)) near 0 behaves like S[1] X^{delta + 1}
    if (close(t.x_power, -1.0)) return lcplx(t.coeff * S[1]);
    if (t.x_power.real() > -1) return 0.0L;
  }
  long double a = X - std::floor(X);
  if (left && a == 0 && X >= 1) a = 1.0L;
  long double p = 0;
  for (size_t i = S.size(); i-- > 0;) p = p * a + S[i];
  lcplx xp;
  if (t.x_power.imag() == 0 && X > 0) {
    xp = std::pow(static_cast<long double>(X), static_cast<long double>(t.x_power.real()));
  } else {
    xp = lcplx(xpow(X, t.x_power));
  }
  return lcplx(t.coeff) * xp * p;
}

// P[coeff * X^delta q-check_r] by the integration-by-parts recursion.
void P_of_scaled(TermSum& out, cplx coeff, cplx delta, int r) {
  while (true) {
    if (delta == cplx(0.0)) {
      // P[q_r] = X^{-1} (q_{r+1}(X) - q_{r+1}(0)) / (r + 1)
      out.add(Term{coeff / static_cast<double>(r + 1), -1.0, r + 1, true, false});
      return;
    }
    if (delta.real() <= 0) {
      if (delta.real() <= -1) throw Error(ErrorKind::domain, "apply_P_symbolic: Re(x_power) <= -1 is not integrable", r);
      out.add(Term{coeff, delta, r, false, true});
      return;
    }
    double k = static_cast<double>(r + 1);
    out.add(Term{coeff / k, delta - 1.0, r + 1, false, false});
    coeff *= -delta / k;
    delta -= 1.0;
    r += 1;
  }
}

void P_of(TermSum& out, const Term& t) {
  if (t.residual)
    throw Error(ErrorKind::contract, "apply_P_symbolic: P of a residual term is not represented in the term algebra");
  if (t.scale_index < 0) {
    if (t.x_power.real() <= -1) throw Error(ErrorKind::domain, "apply_P_symbolic: X^delta with Re(delta) <= -1");
    out.add(Term{t.coeff / (t.x_power + 1.0), t.x_power, -1, false, false});
    return;
  }
  if (t.shifted) {
    if (t.x_power.real() > -1) {
      // X^delta (q_r - q_r(0)) = X^delta q_r - q_r(0) X^delta
      double q0 = scale::qcheck_coeffs(t.scale_index)[0];
      P_of_scaled(out, t.coeff, t.x_power, t.scale_index);
      if (q0 != 0) out.add(Term{-q0 * t.coeff / (t.x_power + 1.0), t.x_power, -1, false, false});
      return;
    }
    if (t.x_power.real() <= -2)
      throw Error(ErrorKind::domain, "apply_P_symbolic: shifted term with Re(x_power) <= -2", t.scale_index);
    out.add(Term{t.coeff, t.x_power, t.scale_index, true, true});
    return;
  }
  P_of_scaled(out, t.coeff, t.x_power, t.scale_index);
}

}  // namespace

bool Term::same_key(const Term& o) const {
  return scale_index == o.scale_index && shifted == o.shifted && residual == o.residual && close(x_power, o.x_power);
}

TermSum::TermSum(std::vector<Term> terms) {
  for (const auto& t : terms) add(t);
}

void TermSum::add(const Term& t) {
  if (t.scale_index < 0 && t.shifted) throw Error(ErrorKind::contract, "Term: shift needs a periodic factor");
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (!it->same_key(t)) continue;
    it->coeff += t.coeff;
    if (std::abs(it->coeff) == 0) terms_.erase(it);
    return;
  }
  if (std::abs(t.coeff) != 0) terms_.push_back(t);
}

TermSum& TermSum::operator+=(const TermSum& o) {
  for (const auto& t : o.terms_) add(t);
  return *this;
}

TermSum& TermSum::operator*=(cplx k) {
  if (k == cplx(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= k;
  return *this;
}

std::complex<long double> TermSum::eval_extended(double X) const {
  lcplx acc = 0;
  for (const auto& t : terms_) acc += eval_term(t, X, false);
  return acc;
}

cplx TermSum::eval(double X) const { return cplx(eval_extended(X)); }

cplx TermSum::eval_left(double X) const {
  lcplx acc = 0;
  for (const auto& t : terms_) acc += eval_term(t, X, true);
  return cplx(acc);
}

TermSum apply_P_symbolic(const TermSum& input) {
  TermSum out;
  for (const auto& t : input.terms()) P_of(out, t);
  return out;
}

TermSum x_minus_qcheck_power(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "x_minus_qcheck_power: n < 0", n);
  TermSum out;
  double c = 1.0;  // C(n, j)
  for (int j = 0; j <= n; ++j) {
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    out.add(Term{sign * c, static_cast<double>(n - j), j, false, false});
    c = c * (n - j) / (j + 1);
  }
  return out;
}

GridFunction sample(const TermSum& t, double x_max, double step) {
  GridFunction g = make_grid(x_max, step);
  size_t per = g.per_unit();
  size_t units = static_cast<size_t>(x_max);
  g.left.assign(units + 1, 0.0);
  std::vector<cplx> cont(g.size(), 0.0);  // continuous (residual) part
  for (const auto& term : t.terms()) {
    if (!term.residual) {
      for (size_t i = 0; i < g.size(); ++i) g.samples[i] += cplx(eval_term(term, static_cast<double>(i) * step, false));
      for (size_t n = 1; n <= units; ++n) g.left[n] += cplx(eval_term(term, static_cast<double>(n), true));
      continue;
    }
    // Running integral so every grid point costs one partial interval; the
    // value at X = 0 is left at 0.
    auto S = factor_poly(term);
    cplx done = 0;
    for (size_t i = 1; i < g.size(); ++i) {
      size_t n = i / per, off = i % per;
      cplx integral;
      if (off == 0) {
        done += unit_integral(term, S, static_cast<long long>(n) - 1, 1.0);
        integral = done;
      } else {
        integral = done + unit_integral(term, S, static_cast<long long>(n), static_cast<double>(off) * step);
      }
      cont[i] += term.coeff * integral / (static_cast<double>(i) * step);
    }
  }
  for (size_t i = 0; i < g.size(); ++i) g.samples[i] += cont[i];
  g.left[0] = g.samples[0];
  for (size_t n = 1; n <= units; ++n) g.left[n] += cont[n * per];
  return g;
}

}  // namespace cesaro::summation
