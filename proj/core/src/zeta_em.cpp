// Euler-Maclaurin evaluation of zeta and zeta'. The finite sums are carried in
// binary128 because for Re(s) < 0 the partial sum and the N^{1-s}/(s-1) term
// cancel to many digits before the (small) result emerges.
#include <quadmath.h>

#include <array>
#include <cmath>

#include "cesaro/special.hpp"

namespace cesaro::special {
namespace {

using q = __float128;

struct qc {
  q re = 0, im = 0;
};

qc operator+(qc a, qc b) { return {a.re + b.re, a.im + b.im}; }
qc operator-(qc a, qc b) { return {a.re - b.re, a.im - b.im}; }
qc operator*(qc a, qc b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
qc operator*(q a, qc b) { return {a * b.re, a * b.im}; }
qc operator/(qc a, qc b) {
  q d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
q absq(qc a) { return hypotq(a.re, a.im); }

// n^{-s} given log n.
qc pow_neg(q logn, qc s) {
  q mag = expq(-s.re * logn);
  q ang = -s.im * logn;
  return {mag * cosq(ang), mag * sinq(ang)};
}

constexpr int kMaxB = 48;

// c[k] = B_{2k} / (2k)!, k = 0..kMaxB/2
const std::array<q, kMaxB / 2 + 1>& bernoulli_over_factorial() {
  static std::array<q, kMaxB / 2 + 1> table = [] {
    std::array<q, kMaxB + 1> B{};
    B[0] = 1;
    for (int m = 1; m <= kMaxB; ++m) {
      q acc = 0;
      q c = 1;  // C(m+1, k)
      for (int k = 0; k < m; ++k) {
        acc += c * B[k];
        c = c * (m + 1 - k) / (k + 1);
      }
      B[m] = -acc / (m + 1);
    }
    std::array<q, kMaxB / 2 + 1> out{};
    q fact = 1;
    for (int n = 0; n <= kMaxB; ++n) {
      if (n > 0) fact *= n;
      if (n % 2 == 0) out[n / 2] = B[n] / fact;
    }
    return out;
  }();
  return table;
}

struct EmResult {
  qc value;
  qc deriv;
  double dropped = 0;  // |first omitted correction term| (value)
  double dropped_deriv = 0;
};

EmResult em(cplx s_in, int N, int M, bool want_deriv) {
  if (M + 1 > kMaxB / 2) throw Error(ErrorKind::range, "zeta: too many correction terms", M);
  const auto& c = bernoulli_over_factorial();
  qc s{s_in.real(), s_in.imag()};
  EmResult r;
  for (int n = N - 1; n >= 1; --n) {  // small terms first
    q ln = logq(static_cast<q>(n));
    qc t = pow_neg(ln, s);
    r.value = r.value + t;
    if (want_deriv) r.deriv = r.deriv - ln * t;
  }
  q L = logq(static_cast<q>(N));
  qc pw = pow_neg(L, s);  // N^{-s}
  qc one{1, 0};
  qc sm1 = s - one;
  qc head = static_cast<q>(N) * pw / sm1;  // N^{1-s}/(s-1)
  r.value = r.value + head + static_cast<q>(0.5Q) * pw;
  if (want_deriv) {
    r.deriv = r.deriv - L * head - head / sm1 - (L * static_cast<q>(0.5Q)) * pw;
  }
  // Correction k: c_k * P_k(s) * N^{-s-2k+1}, P_k = s (s+1) ... (s+2k-2).
  qc P = s;
  qc dP = one;
  qc npow = static_cast<q>(N) * pw;  // becomes N^{-s-2k+1}
  q invN2 = 1 / (static_cast<q>(N) * static_cast<q>(N));
  for (int k = 1; k <= M + 1; ++k) {
    npow = invN2 * npow;
    qc term = c[k] * (P * npow);
    qc dterm = c[k] * ((dP - L * P) * npow);
    if (k <= M) {
      r.value = r.value + term;
      if (want_deriv) r.deriv = r.deriv + dterm;
    } else {
      r.dropped = static_cast<double>(absq(term));
      r.dropped_deriv = static_cast<double>(absq(dterm));
    }
    qc a{s.re + static_cast<q>(2 * k - 1), s.im};
    qc b{s.re + static_cast<q>(2 * k), s.im};
    qc ab = a * b;
    dP = dP * ab + P * (a + b);
    P = P * ab;
  }
  return r;
}

cplx to_c(qc a) { return {static_cast<double>(a.re), static_cast<double>(a.im)}; }

// Re(s) large: the Dirichlet series itself converges to full precision in a
// handful of terms.
bool direct_sum(cplx s, bool deriv, cplx& out) {
  if (s.real() < 20.0 || std::abs(s.imag()) > 100.0) return false;
  cplx acc = deriv ? cplx(0) : cplx(1);
  for (int n = 2; n < 64; ++n) {
    double ln = std::log(static_cast<double>(n));
    cplx t = std::exp(-s * ln);
    if (deriv) t *= -ln;
    acc += t;
    if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(acc))) break;
  }
  out = acc;
  return true;
}

void check_pole(cplx s, const char* who) {
  if (s == cplx(1.0, 0.0)) throw Error(ErrorKind::pole, std::string(who) + ": pole at s = 1", 1);
}

}  // namespace

cplx zeta_em(cplx s, int N, int M) {
  check_pole(s, "zeta");
  if (N < 1 || M < 0) throw Error(ErrorKind::contract, "zeta_em: N >= 1 and M >= 0 required");
  return to_c(em(s, N, M, false).value);
}

cplx zeta_deriv_em(cplx s, int N, int M) {
  check_pole(s, "zeta_deriv");
  if (N < 1 || M < 0) throw Error(ErrorKind::contract, "zeta_deriv_em: N >= 1 and M >= 0 required");
  return to_c(em(s, N, M, true).deriv);
}

cplx zeta(cplx s) {
  check_pole(s, "zeta");
  cplx out;
  if (direct_sum(s, false, out)) return out;
  int N = 25 + static_cast<int>(std::ceil(std::abs(s.imag())));
  const int M = 14;
  for (;;) {
    EmResult r = em(s, N, M, false);
    double mag = static_cast<double>(absq(r.value));
    if (r.dropped <= 1e-13 * mag || r.dropped < 1e-300 || N >= (1 << 14)) return to_c(r.value);
    N *= 2;
  }
}

cplx zeta_deriv(cplx s) {
  check_pole(s, "zeta_deriv");
  cplx out;
  if (direct_sum(s, true, out)) return out;
  int N = 25 + static_cast<int>(std::ceil(std::abs(s.imag())));
  const int M = 14;
  for (;;) {
    EmResult r = em(s, N, M, true);
    double mag = static_cast<double>(absq(r.deriv));
    if (r.dropped_deriv <= 1e-13 * mag || r.dropped_deriv < 1e-300 || N >= (1 << 14))
      return to_c(r.deriv);
    N *= 2;
  }
}

}  // namespace cesaro::special
