#include <algorithm>
#include <cmath>

#include "cesaro/formal.hpp"

namespace cesaro::formal {

using special::euler_gamma;
using special::stieltjes1;
using special::stieltjes2;

cplx EpsLaurent::operator[](int order) const {
  if (order < kMin || order > kMax) return 0.0;
  return c_[static_cast<size_t>(order - kMin)];
}

void EpsLaurent::set(int order, cplx v) {
  if (order < kMin || order > kMax) {
    if (v == cplx(0.0)) return;
    throw Error(ErrorKind::order_overflow, "EpsLaurent: order outside -2..2", order);
  }
  c_[static_cast<size_t>(order - kMin)] = v;
}

EpsLaurent EpsLaurent::constant(cplx v) {
  EpsLaurent e;
  e.set(0, v);
  return e;
}

int EpsLaurent::low() const {
  for (int k = kMin; k <= kMax; ++k)
    if ((*this)[k] != cplx(0.0)) return k;
  return kMax + 1;
}

EpsLaurent& EpsLaurent::operator+=(const EpsLaurent& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  valid_ = std::min(valid_, o.valid_);
  return *this;
}

EpsLaurent& EpsLaurent::operator-=(const EpsLaurent& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  valid_ = std::min(valid_, o.valid_);
  return *this;
}

EpsLaurent& EpsLaurent::operator*=(cplx k) {
  for (auto& x : c_) x *= k;
  return *this;
}

namespace {
// Lowest order that may be non-zero, counting the unknown orders above
// valid_through().
int effective_low(const EpsLaurent& e) { return std::min(e.low(), e.valid_through() + 1); }
}  // namespace

EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b) {
  EpsLaurent r;
  for (int i = EpsLaurent::kMin; i <= EpsLaurent::kMax; ++i) {
    if (a[i] == cplx(0.0)) continue;
    for (int j = EpsLaurent::kMin; j <= EpsLaurent::kMax; ++j) {
      if (b[j] == cplx(0.0)) continue;
      int k = i + j;
      if (k > EpsLaurent::kMax) continue;
      r.set(k, r[k] + a[i] * b[j]);  // overflow below kMin throws
    }
  }
  int v = std::min(a.valid_through() + effective_low(b), b.valid_through() + effective_low(a));
  r.limit_validity(std::min(v, EpsLaurent::kMax));
  return r;
}

EpsLaurent exp_eps(cplx L) {
  EpsLaurent e;
  e.set(0, 1.0);
  e.set(1, L);
  e.set(2, 0.5 * L * L);
  return e;
}

EpsLaurent rgamma_eps(cplx a, int slope) {
  EpsLaurent e;
  if (slope == 0) {
    e.set(0, special::rgamma(a));
    return e;
  }
  double s = slope;
  if (auto n = special::as_integer(a, 0.0); n && *n <= 0) {
    // 1/Gamma(-m + x) = (-1)^m m! (x - psi(m + 1) x^2 + ...)
    long long m = -*n;
    double fact = 1.0;
    for (long long i = 2; i <= m; ++i) fact *= static_cast<double>(i);
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    cplx psi = special::digamma(static_cast<double>(m + 1));
    e.set(1, sign * fact * s);
    e.set(2, -sign * fact * psi * s * s);
    return e;
  }
  // R(a + x) = R(a) (1 - psi x + (psi^2 - psi') x^2 / 2 + ...)
  cplx R = special::rgamma(a);
  cplx psi = special::digamma(a);
  cplx psi1 = special::trigamma(a);
  e.set(0, R);
  e.set(1, -R * psi * s);
  e.set(2, R * (psi * psi - psi1) * 0.5 * s * s);
  return e;
}

EpsLaurent binom_eps(cplx rho, long long j) {
  if (auto n = special::as_integer(rho + 1.0, 0.0); n && *n <= 0)
    throw Error(ErrorKind::pole, "binom_eps: fabric undefined for negative-integer rho", *n - 1);
  cplx g = special::gamma(rho + 1.0);
  EpsLaurent a = rgamma_eps(static_cast<double>(j + 1), 1);
  EpsLaurent b = rgamma_eps(rho - static_cast<double>(j) + 1.0, -1);
  return (a * b) * g;
}

EpsLaurent tau_eps(cplx w, int slope, int log_power) {
  if (log_power < 0 || log_power > 1)
    throw Error(ErrorKind::contract, "tau_eps: ln(tau) power must be 0 or 1", log_power);
  cplx u = -w;
  double a = -static_cast<double>(slope);  // argument is u + a eps
  EpsLaurent e;
  bool at_pole = (special::as_integer(u - 1.0, 1e-12) == 0LL);
  if (at_pole) {
    if (slope == 0)
      throw Error(ErrorKind::uncancelled_singularity, "tau_eps: zeta pole at argument 1 with no fabric slope");
    if (log_power == 0) {
      // zeta(1 + x) = 1/x + gamma - gamma1 x + gamma2 x^2 / 2
      e.set(-1, 1.0 / a);
      e.set(0, euler_gamma);
      e.set(1, -stieltjes1 * a);
      e.set(2, 0.5 * stieltjes2 * a * a);
    } else {
      // -zeta'(1 + x) = 1/x^2 + gamma1 - gamma2 x
      e.set(-2, 1.0 / (a * a));
      e.set(0, stieltjes1);
      e.set(1, -stieltjes2 * a);
      e.limit_validity(1);
    }
    return e;
  }
  if (log_power == 0) {
    e.set(0, special::zeta(u));
    if (slope != 0) {
      e.set(1, special::zeta_deriv(u) * a);
      e.limit_validity(1);
    }
  } else {
    e.set(0, -special::zeta_deriv(u));
    if (slope != 0) e.limit_validity(0);
  }
  return e;
}

}  // namespace cesaro::formal
