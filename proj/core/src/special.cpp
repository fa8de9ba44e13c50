#include "cesaro/special.hpp"

#include <array>
#include <cmath>
#include <string>

namespace cesaro {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::indeterminate: return "indeterminate";
    case ErrorKind::order_overflow: return "order_overflow";
    case ErrorKind::uncancelled_singularity: return "uncancelled_singularity";
    case ErrorKind::range: return "range";
    case ErrorKind::contract: return "contract";
    case ErrorKind::no_limit: return "no_limit";
    case ErrorKind::resolution: return "resolution";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::window: return "window";
    case ErrorKind::propagation: return "propagation";
  }
  return "unknown";
}

namespace special {
namespace {

// Godfrey's g = 7, n = 9 Lanczos kernel.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k}, k = 1..8
constexpr std::array<double, 8> kB2k = {1.0 / 6,  -1.0 / 30,     1.0 / 42, -1.0 / 30,
                                       5.0 / 66, -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};

// sin(pi z) with the real part reduced first so that integer z gives exact 0.
cplx sinpi(cplx z) {
  double n = std::round(z.real());
  cplx w(z.real() - n, z.imag());
  cplx v = std::sin(pi * w);
  return (static_cast<long long>(n) % 2 == 0) ? v : -v;
}

cplx gamma_right(cplx z) {  // Re z >= 0.5
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  cplx t = z + 7.5;
  return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

void check_gamma_pole(cplx z, const char* who) {
  if (auto n = as_integer(z, 0.0); n && *n <= 0)
    throw Error(ErrorKind::pole, std::string(who) + ": pole at non-positive integer " + std::to_string(*n), *n);
}

}  // namespace

std::optional<long long> as_integer(cplx z, double tol) {
  if (std::abs(z.imag()) > tol) return std::nullopt;
  double r = std::round(z.real());
  if (std::abs(z.real() - r) > tol) return std::nullopt;
  return static_cast<long long>(r);
}

cplx log(cplx z) {
  if (z.imag() == 0.0) z = cplx(z.real(), 0.0);
  return std::log(z);
}

cplx log1p(cplx w) {
  double x = w.real(), y = w.imag();
  if (std::abs(x) < 0.5 && std::abs(y) < 0.5) {
    double re = 0.5 * std::log1p(2.0 * x + x * x + y * y);
    return {re, std::atan2(y, 1.0 + x)};
  }
  return log(1.0 + w);
}

cplx cpow(cplx base, cplx exponent) {
  if (base == cplx(0.0, 0.0)) {
    if (exponent.real() > 0.0) return 0.0;
    throw Error(ErrorKind::domain, "cpow: zero base with non-positive real exponent");
  }
  if (exponent == cplx(0.0, 0.0)) return 1.0;
  return std::exp(exponent * log(base));
}

cplx exp_i_pi(cplx x) {
  if (auto n = as_integer(x, 0.0)) return (*n % 2 == 0) ? 1.0 : -1.0;
  double n = std::round(x.real());
  double f = x.real() - n;
  cplx v = std::exp(-pi * x.imag()) * cplx(std::cos(pi * f), std::sin(pi * f));
  return (static_cast<long long>(n) % 2 == 0) ? v : -v;
}

cplx gamma(cplx z) {
  check_gamma_pole(z, "gamma");
  if (z.real() >= 0.5) return gamma_right(z);
  return pi / (sinpi(z) * gamma_right(1.0 - z));
}

cplx rgamma(cplx z) {
  if (auto n = as_integer(z, 0.0); n && *n <= 0) return 0.0;
  if (z.real() >= 0.5) return 1.0 / gamma_right(z);
  return sinpi(z) * gamma_right(1.0 - z) / pi;
}

cplx lgamma(cplx z) {
  check_gamma_pole(z, "lgamma");
  if (z.real() <= 0.0) return log(gamma(z));
  cplx shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift += log(z);
    z += 1.0;
  }
  cplx inv = 1.0 / z;
  cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx p = inv;
  for (int k = 1; k <= 8; ++k) {
    series += kB2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return (z - 0.5) * log(z) - z + 0.5 * std::log(2.0 * pi) + series - shift;
}

cplx digamma(cplx z) {
  check_gamma_pole(z, "digamma");
  cplx acc = 0.0;
  while (z.real() < 12.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  cplx inv2 = 1.0 / (z * z);
  cplx p = inv2;
  cplx series = 0.0;
  for (int k = 1; k <= 8; ++k) {
    series += kB2k[k - 1] / (2.0 * k) * p;
    p *= inv2;
  }
  return acc + log(z) - 0.5 / z - series;
}

cplx trigamma(cplx z) {
  check_gamma_pole(z, "trigamma");
  cplx acc = 0.0;
  while (z.real() < 12.0) {
    acc += 1.0 / (z * z);
    z += 1.0;
  }
  cplx inv = 1.0 / z;
  cplx inv2 = inv * inv;
  cplx p = inv2 * inv;
  cplx series = 0.0;
  for (int k = 1; k <= 8; ++k) {
    series += kB2k[k - 1] * p;
    p *= inv2;
  }
  return acc + inv + 0.5 * inv2 + series;
}

cplx binom(cplx rho, long long j) {
  if (j >= 0) {
    cplx acc = 1.0;
    for (long long i = 0; i < j; ++i) acc *= (rho - static_cast<double>(i)) / static_cast<double>(i + 1);
    return acc;
  }
  // Gamma(j + 1) is a pole for every negative j.
  auto m = as_integer(rho + 1.0, 0.0);
  if (!m || *m > 0) return 0.0;
  // Numerator pole too: rho = -m', the second denominator factor decides.
  auto d = as_integer(rho - static_cast<double>(j) + 1.0, 0.0);
  if (d && *d <= 0) return 0.0;
  throw Error(ErrorKind::indeterminate, "binom: pole/pole quotient at negative index", j);
}

cplx polylog(cplx s, cplx alpha) {
  if (std::abs(alpha) >= 1.0) throw Error(ErrorKind::domain, "polylog: |alpha| >= 1");
  if (alpha == cplx(0.0, 0.0)) return 0.0;
  cplx sum = 0.0;
  cplx apow = 1.0;
  for (long long j = 1; j < 100000000; ++j) {
    apow *= alpha;
    cplx term = std::exp(-s * std::log(static_cast<double>(j))) * apow;
    sum += term;
    if (std::abs(term) < 1e-14 * std::abs(sum)) return sum;
  }
  throw Error(ErrorKind::range, "polylog: no convergence");
}

}  // namespace special
}  // namespace cesaro
