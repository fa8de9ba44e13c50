#include <cmath>
#include <vector>

#include "cesaro/combinat.hpp"
#include "cesaro/scale.hpp"
#include "helpers.hpp"

using namespace cesaro;
using combinat::BigInt;
using combinat::Rational;
using testing::cplx;
using testing::rel_err;
using testing::thrown_kind;

namespace {

// Stirling numbers of the second kind by their recurrence.
BigInt stirling2(int n, int k) {
  std::vector<std::vector<BigInt>> S(n + 1, std::vector<BigInt>(n + 1, 0));
  S[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int m = 1; m <= i; ++m) S[i][m] = m * S[i - 1][m] + S[i - 1][m - 1];
  return k <= n ? S[n][k] : BigInt(0);
}

// (alpha d/dalpha)^n e^{2 alpha} = p_n(alpha) e^{2 alpha}; returns p_n as coefficients.
std::vector<double> theta_power_exp2(int n) {
  std::vector<double> p = {1.0};
  for (int i = 0; i < n; ++i) {
    std::vector<double> q(p.size() + 1, 0.0);
    for (size_t k = 0; k < p.size(); ++k) {
      q[k + 1] += 2 * p[k];         // alpha * 2 p
      if (k > 0) q[k] += k * p[k];  // alpha * p'
    }
    p = q;
  }
  return p;
}

}  // namespace

TEST_CASE("triangle rows match the printed display") {
  const std::vector<std::vector<int>> display = {
      {1}, {1, 1}, {1, 3, 1}, {1, 6, 7, 1}, {1, 10, 25, 15, 1}, {1, 15, 65, 90, 31, 1}, {1, 21, 140, 350, 301, 63, 1}};
  auto t = combinat::triangle(7);
  REQUIRE(t.rows() == 7);
  for (int n = 1; n <= 7; ++n) {
    const auto& row = t.row(n);
    REQUIRE(row.size() == display[n - 1].size());
    for (size_t i = 0; i < row.size(); ++i) CHECK(row[i] == display[n - 1][i]);
  }
}

TEST_CASE("triangle entries are Stirling numbers of the second kind") {
  auto t = combinat::triangle(30);
  for (int n = 1; n <= 30; ++n)
    for (int m = 1; m <= n; ++m) CHECK(t.entry(n, m) == stirling2(n, m));
  CHECK(t.entry(0, 0) == 1);
  CHECK(t.entry(4, 5) == 0);
  CHECK(t.entry(4, 0) == 0);
  // row 30 overflows 64 bits in its middle
  CHECK(t.entry(30, 14) > BigInt("9223372036854775807"));
}

TEST_CASE("falling-factorial expansion gives the monomial") {
  for (int n = 1; n <= 10; ++n)
    for (int j = 0; j <= 10; ++j) {
      BigInt want = 1;
      for (int i = 0; i < n; ++i) want *= j;
      CAPTURE(n);
      CAPTURE(j);
      CHECK(combinat::alpha_ddalpha_apply(n, j) == want);
    }
}

TEST_CASE("expanded operator agrees with repeated alpha d/dalpha") {
  auto t = combinat::triangle(5);
  const double a = 0.5;
  for (int n = 1; n <= 5; ++n) {
    double expanded = 0;
    for (int m = 1; m <= n; ++m)
      expanded += static_cast<double>(t.entry(n, m)) * std::pow(a, m) * std::pow(2.0, m) * std::exp(2 * a);
    auto p = theta_power_exp2(n);
    double direct = 0;
    for (size_t k = 0; k < p.size(); ++k) direct += p[k] * std::pow(a, static_cast<double>(k));
    direct *= std::exp(2 * a);
    CHECK(std::abs(expanded - direct) < 1e-8);
  }
}

TEST_CASE("epsilon series terminates for integer order") {
  for (int n = 1; n <= 6; ++n) {
    auto c = combinat::epsilon_series(static_cast<double>(n), n + 3);
    auto t = combinat::triangle(n);
    for (int m = 1; m <= n; ++m) CHECK(std::abs(c[m - 1] - cplx(static_cast<double>(t.entry(n, m)))) < 1e-9);
    for (int m = n + 1; m <= n + 3; ++m) CHECK(std::abs(c[m - 1]) < 1e-9);
    for (int j : {1, 2, 5}) CHECK(rel_err(combinat::epsilon_series_apply(n, j, n + 1), std::pow(j, n)) < 1e-12);
  }
  auto half = combinat::epsilon_series(0.5, 6);
  CHECK(half.size() == 6);
  for (cplx c : half) CHECK(std::isfinite(std::abs(c)));
}

TEST_CASE("log signed binomial matches the direct product") {
  for (cplx rho : {cplx(0.5), cplx(-0.3), cplx(0.2, 0.1)}) {
    auto l = combinat::log_signed_binomial(rho, 40);
    REQUIRE(l.size() == 41);
    CHECK(l[0] == cplx(0.0));
    for (long long j = 1; j <= 40; ++j) {
      cplx direct = special::binom(rho, j) * ((j % 2) ? -1.0 : 1.0);
      CHECK(rel_err(std::exp(l[j]), direct) < 1e-12);
    }
  }
}

TEST_CASE("binomial asymptotics: exponent and constant") {
  for (cplx rho : {cplx(0.5), cplx(-0.3), cplx(0.2, 0.1)}) {
    auto lo = combinat::binom_asym_fit(rho, 1000, 10000);
    auto hi = combinat::binom_asym_fit(rho, 10000, 100000);
    CAPTURE(rho);
    CHECK(std::abs(lo.exponent - (-rho - 1.0)) < 1e-3);
    CHECK(rel_err(hi.C, lo.C) < 1e-6);
    // C(rho, j) ~ (-1)^j j^{-rho-1} / Gamma(-rho)
    CHECK(rel_err(lo.C, special::rgamma(-rho)) < 1e-6);
    CHECK(lo.residual < 1e-10);
    // a_1 = rho (rho + 1) / 2
    REQUIRE_FALSE(lo.a_coeffs.empty());
    CHECK(std::abs(lo.a_coeffs[0] - rho * (rho + 1.0) / 2.0) < 1e-4);
  }
}

TEST_CASE("binomial fit rejects degenerate input") {
  CHECK(thrown_kind([] { combinat::binom_asym_fit(2.0, 1000, 10000); }) == ErrorKind::degenerate);
  CHECK(thrown_kind([] { combinat::binom_asym_fit(0.5, 5, 10000); }) == ErrorKind::window);
  CHECK(thrown_kind([] { combinat::binom_asym_fit(0.5, 1000, 2000); }) == ErrorKind::window);
}

TEST_CASE("log-binomial expansion coefficients") {
  for (double x : {0.3, 0.5}) {
    auto c = combinat::ln_binom_expansion_check(x - 1);
    CAPTURE(x);
    CHECK(c.x == doctest::Approx(x));
    CHECK(std::abs(c.c1_fit - c.c1_expected) < 1e-4);
    CHECK(std::abs(c.c2_fit - c.c2_expected) < 1e-4);
    CHECK(std::abs(c.constant_series - c.constant_direct) < 1e-10);
    // m = 1: (q-check_1(x) + zeta(-1)) / 1
    double q1 = x * x / 2 - x / 2 + 1.0 / 12;
    CHECK(c.c1_expected == doctest::Approx(q1 - 1.0 / 12));
  }
}

TEST_CASE("q-check at one half sits on the expected ray") {
  std::vector<double> grid = {0.05, 0.1, 0.2, 0.3};
  for (int n = 1; n <= 7; ++n) {
    auto r = combinat::ray_behaviour_check(n, grid);
    CAPTURE(n);
    CHECK(r.exact_parity);
    CHECK(r.at_half == scale::qcheck_at_half(n));
    CHECK(r.ray == combinat::expected_ray(n));
    for (const auto& p : r.points) CHECK(p.on_ray);
  }
  CHECK(combinat::expected_ray(3) == combinat::expected_ray(7));
  CHECK_THROWS_AS(combinat::ray_behaviour_check(8, grid), cesaro::Error);
  CHECK(combinat::expected_ray(1) != combinat::expected_ray(3));
}

TEST_CASE("theta coefficients from Bernoulli numbers") {
  CHECK(combinat::theta_coefficient(1) == Rational(1, 48));
  CHECK(combinat::theta_coefficient(3) == Rational(7, 5760));
  CHECK(combinat::theta_coefficient(5) == Rational(31, 80640));
  CHECK(combinat::theta_coefficient(4) == 0);
  auto rows = combinat::theta_coefficient_check({1, 3, 5, 7, 9});
  for (const auto& r : rows) {
    CAPTURE(r.n);
    CHECK(r.match);
    CHECK(r.qcheck_half == 2 * r.n * r.theta_coeff);
  }
}
