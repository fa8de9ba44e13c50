#include <cmath>
#include <random>

#include "cesaro/averaging.hpp"
#include "cesaro/scale.hpp"
#include "helpers.hpp"

using namespace cesaro;
using namespace cesaro::summation;
using scale::Rational;
using testing::cplx;
using testing::rel_err;

namespace {

constexpr double kStep = 1.0 / 128;

TermSum single(cplx coeff, cplx x_power, int r) {
  Term t;
  t.coeff = coeff;
  t.x_power = x_power;
  t.scale_index = r;
  return TermSum({t});
}

// k^n alpha^r with k = floor X, alpha = X - k; left limits at integers use alpha = 1.
GridFunction floor_frac(int n, int r, double x_max, cplx z0 = 0.0) {
  return sample(
      [=](double X, bool left) -> cplx {
        double k = std::floor(X), a = X - k;
        if (left && X >= 1) {
          k -= 1;
          a = 1;
        }
        return std::pow(k, n) * std::pow(a, r);
      },
      x_max, kStep, z0);
}

}  // namespace

TEST_CASE("combinatorial operator identity holds exactly in Q[P]") {
  for (int n = 0; n <= 14; ++n) {
    auto c = operator_identity_check(n);
    CAPTURE(n);
    CHECK(c.equal);
    CHECK(c.differing_degree == -1);
    CHECK(c.lhs == c.rhs);
  }
}

TEST_CASE("regular operator polynomials fix P = 1") {
  for (cplx x : {cplx(-2.5), cplx(-1), cplx(0.3, 0.7), cplx(-4.2, 1.0)}) {
    auto q = regular_poly(x, Mode::theorem2);
    CHECK(q.regular());
    CHECK(std::abs(q.at(1.0) - cplx(1.0)) < 1e-12);
  }
  for (cplx d : {cplx(0.5), cplx(1.3, 0.2), cplx(2.0)}) {
    CHECK(std::abs(regular_poly(d, Mode::theorem1).at(1.0) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(regular_poly(d, Mode::theorem1, true).at(1.0) - cplx(1.0)) < 1e-12);
  }
  for (int n = 0; n <= 8; ++n) {
    auto p = discrete_poly(n);
    REQUIRE(p.exact().has_value());
    CHECK((*p.exact())(Rational(1)) == 1);
    CHECK(p.degree() == 2 * n + 1);
  }
  // s = -2 is exact: (4/3)(P - 1/4) P^3
  auto q = regular_poly(-2.0, Mode::theorem2);
  REQUIRE(q.exact().has_value());
  CHECK(*q.exact() == scale::RationalPolynomial({0, 0, 0, Rational(-1, 3), Rational(4, 3)}));
}

TEST_CASE("operator polynomial algebra") {
  auto a = OperatorPolynomial::linear(Rational(2), Rational(1, 2));  // 2P - 1
  auto b = OperatorPolynomial::power(2);
  auto c = a * b;
  CHECK(c.degree() == 3);
  CHECK(std::abs(c.at(3.0) - cplx(45.0)) < 1e-14);
  CHECK(c.exact().has_value());
  CHECK_FALSE(OperatorPolynomial::linear(cplx(1.0), cplx(0.5)).regular());
  CHECK(OperatorPolynomial().to_string() == "1");
}

TEST_CASE("exact rational recognition") {
  CHECK(exact_rational(0.375) == Rational(3, 8));
  CHECK(exact_rational(-2.0) == Rational(-2));
  CHECK_FALSE(exact_rational(0.1).has_value());
  CHECK_FALSE(exact_rational(cplx(0.5, 0.5)).has_value());
}

TEST_CASE("numeric P on power functions") {
  for (double d : {0.0, 1.0, 2.5}) {
    auto g = sample(single(1.0, d, -1), 64.0, kStep);
    auto p = apply_P_numeric(g);
    for (double X : {5.0, 17.5, 64.0}) CHECK(rel_err(p.at(X), std::pow(X, d) / (d + 1)) < 1e-9);
  }
  auto g = sample(single(1.0, 1.0, -1), 32.0, kStep);
  auto p3 = apply_P_numeric(g, 3);
  CHECK(rel_err(p3.at(20.0), 20.0 / 8) < 1e-9);
}

TEST_CASE("symbolic and numeric P agree on random term sums") {
  std::mt19937 gen(97);
  std::uniform_real_distribution<double> U(-1.0, 1.0), D(0.0, 2.0);
  std::uniform_int_distribution<int> R(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    TermSum t;
    for (int k = 0; k < 3; ++k) {
      Term term;
      term.coeff = cplx(U(gen), U(gen));
      term.x_power = cplx(D(gen), trial % 2 ? 0.3 * U(gen) : 0.0);
      term.scale_index = R(gen);
      t.add(term);
    }
    auto sym = apply_P_symbolic(t);
    auto num = apply_P_numeric(sample(t, 40.0, kStep));
    cplx s = sym.eval(37.5), n = num.at(37.5);
    CAPTURE(trial);
    CHECK(std::abs(s - n) <= 1e-6 * std::max(1.0, std::abs(s)));
  }
}

TEST_CASE("term sums at integer points take one-sided limits") {
  auto t = single(1.0, 0.0, 0);  // q-check_0 = alpha - 1/2
  CHECK(std::abs(t.eval(3.0) - cplx(-0.5)) < 1e-15);
  CHECK(std::abs(t.eval_left(3.0) - cplx(0.5)) < 1e-15);
  CHECK(std::abs(t.eval(3.25) - cplx(-0.25)) < 1e-15);
  auto ext = t.eval_extended(3.25);
  CHECK(std::abs(std::complex<double>(ext) - cplx(-0.25)) < 1e-15);
}

TEST_CASE("between integers (X - q-check)^n has derivative X^n") {
  const double h = 1e-5;
  for (int n = 0; n <= 3; ++n) {
    auto t = x_minus_qcheck_power(n);
    for (double X : {3.3, 7.6}) {
      cplx d = (t.eval(X + h) - t.eval(X - h)) / (2 * h);
      CAPTURE(n);
      CAPTURE(X);
      CHECK(std::abs(d - std::pow(X, n)) <= 1e-6 * std::max(1.0, std::pow(X, n)));
    }
  }
}

TEST_CASE("P^n identities on power-weighted scale members") {
  for (int n = 0; n <= 2; ++n)
    for (int r = 0; r <= 2; ++r) CHECK(pn_identity_numeric(n, r, kStep, 1.0) < 1e-5);
  for (int n = 0; n <= 3; ++n) CHECK(xq_identity_numeric(n, kStep, 1.0) < 1e-5);
}

TEST_CASE("power-weighted periodic terms decay like 1/X after smoothing") {
  for (cplx d : {cplx(0.5), cplx(1.3, 0.2)}) {
    for (int r : {1, 2}) {
      int m = static_cast<int>(std::floor(d.real())) + 1;
      auto g = apply_P_numeric(sample(single(1.0, d, r), 2000.0, 1.0 / 64), m);
      // envelope b/X fitted on [250, 500]
      double b = 0;
      for (double X = 250; X <= 500; X += 1.0 / 64) b = std::max(b, std::abs(g.at(X)) * X);
      CAPTURE(d);
      CAPTURE(r);
      CHECK(std::abs(g.at(2000.0)) < 10 * b / 2000);
      CHECK(b > 0);
    }
  }
}

TEST_CASE("Cesaro limits of floor and fraction powers") {
  for (int n = 0; n <= 2; ++n)
    for (int r = 0; r <= 2; ++r) {
      auto L = cesaro_limit(floor_frac(n, r, 1000.0), discrete_poly(n));
      double want = (n % 2 ? -1.0 : 1.0) / (n + r + 1);
      CAPTURE(n);
      CAPTURE(r);
      CHECK(std::abs(L.estimate - want) < 1e-3);
      CHECK(std::abs(L.estimate - want) <= L.error_estimate + 1e-9);
    }
}

TEST_CASE("remainder Cesaro limits with a complex offset") {
  const cplx z0(0.7, 0.3);
  for (int n = 0; n <= 2; ++n)
    for (int r = 0; r <= 2; ++r) {
      cplx want = 0;
      double c = 1;
      for (int j = 0; j <= n; ++j) {
        want += c * std::pow(z0, n - j) / static_cast<double>(r + j + 1);
        c = c * (n - j) / (j + 1);
      }
      if (n % 2) want = -want;
      auto L = cesaro_limit(floor_frac(n, r, 1000.0, z0), discrete_poly(n));
      CAPTURE(n);
      CAPTURE(r);
      CHECK(std::abs(L.estimate - want) < 1e-3);
    }
}

TEST_CASE("grid constraints") {
  CHECK_THROWS_AS(make_grid(10.0, 0.3), cesaro::Error);
  CHECK_THROWS_AS(make_grid(10.0, 1.0), cesaro::Error);
  auto g = make_grid(4.0, 0.25);
  CHECK(g.size() == 17);
  CHECK(g.per_unit() == 4);
}
