#pragma once

#include <complex>
#include <optional>

#include "cesaro/errors.hpp"

namespace cesaro {

using cplx = std::complex<double>;

namespace special {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;
// Stieltjes constants: zeta(1+x) = 1/x + gamma - gamma1*x + gamma2*x^2/2 - ...
inline constexpr double stieltjes1 = -0.0728158454836767248605863758749547830;
inline constexpr double stieltjes2 = -0.00969036319287231848453038603521252;

// Returns the integer n when z is (within 1e-12) an integer, else nullopt.
std::optional<long long> as_integer(cplx z, double tol = 1e-12);

// Principal logarithm with arg in (-pi, pi]; a negative real (including one
// carrying a -0.0 imaginary part) maps to imaginary part +pi.
cplx log(cplx z);

// log(1 + w) without cancellation for small |w|.
cplx log1p(cplx w);

// exp(exponent * Log base). Zero base with Re(exponent) <= 0 is a domain error.
cplx cpow(cplx base, cplx exponent);

// e^{i pi x}, exact at integer x.
cplx exp_i_pi(cplx x);

cplx gamma(cplx z);
// 1/Gamma(z), entire: exact zero at non-positive integers.
cplx rgamma(cplx z);
// log Gamma on Re(z) > 0, continuous branch (Stirling), real for real z.
cplx lgamma(cplx z);
cplx digamma(cplx z);
cplx trigamma(cplx z);

// Riemann zeta. Euler-Maclaurin tail summation with N = 25 + ceil|Im s| and
// M = 14 correction terms, N doubled until the first dropped term is below
// 1e-13 relative. No reflection formula is used anywhere.
cplx zeta(cplx s);
cplx zeta_deriv(cplx s);
// The raw formula at fixed (N, M), exposed for self-consistency checks.
cplx zeta_em(cplx s, int N, int M);
cplx zeta_deriv_em(cplx s, int N, int M);

// Generalised binomial coefficient. Non-negative j uses the falling product;
// negative j goes through Gamma-pole bookkeeping.
cplx binom(cplx rho, long long j);

// Li_s(alpha) = sum_{j>=1} j^{-s} alpha^j for |alpha| < 1.
cplx polylog(cplx s, cplx alpha);

}  // namespace special
}  // namespace cesaro
