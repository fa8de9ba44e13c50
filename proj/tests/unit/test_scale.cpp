#include <vector>

#include "cesaro/scale.hpp"
#include "helpers.hpp"

using namespace cesaro;
using scale::BigInt;
using scale::Kind;
using scale::Rational;
using scale::RationalPolynomial;
using testing::thrown_kind;

namespace {

RationalPolynomial poly(std::vector<Rational> c) { return RationalPolynomial(std::move(c)); }

// Akiyama-Tanigawa: B_n with the B_1 = +1/2 convention, independent of the library.
std::vector<Rational> bernoulli_plus(int n_max) {
  std::vector<Rational> out, a(n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

// zeta(1 - n) = -B_n / n for n >= 2 (B_1 convention irrelevant there).
Rational zeta_one_minus_oracle(int n) { return -bernoulli_plus(n)[n] / n; }

Rational integral01(const RationalPolynomial& p) {
  auto F = p.antiderivative();
  return F(Rational(1)) - F(Rational(0));
}

}  // namespace

TEST_CASE("rational polynomial arithmetic") {
  auto p = poly({1, 2, 3});
  auto q = poly({0, -1});
  CHECK((p + q) == poly({1, 1, 3}));
  CHECK((p * q) == poly({0, -1, -2, -3}));
  CHECK(p.derivative() == poly({2, 6}));
  CHECK(p.antiderivative() == poly({0, 1, 1, 1}));
  CHECK(p.integral01() == Rational(3));
  CHECK(p.shifted(Rational(1)) == poly({6, 8, 3}));
  CHECK(p(Rational(1, 2)) == Rational(11, 4));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.eval(0.5) == doctest::Approx(2.75));
}

TEST_CASE("rational text and JSON round trips") {
  CHECK(scale::to_string(Rational(-3, 6)) == "-1/2");
  CHECK(scale::to_string(Rational(4)) == "4/1");
  CHECK(scale::parse_rational("-7/21") == Rational(-1, 3));
  auto p = poly({Rational(1, 12), Rational(-1, 2), Rational(1, 2)});
  CHECK(RationalPolynomial::from_json(p.to_json()) == p);
  CHECK(p.to_strings() == std::vector<std::string>{"1/12", "-1/2", "1/2"});
}

TEST_CASE("Bernoulli numbers against an independent recurrence") {
  auto lib = scale::bernoulli_numbers(40);
  auto ref = bernoulli_plus(40);
  for (int n = 0; n <= 40; ++n) {
    CAPTURE(n);
    if (n == 1)
      CHECK(abs(lib[1]) == Rational(1, 2));
    else
      CHECK(lib[n] == ref[n]);
  }
  // B_30 numerator exceeds 64 bits
  CHECK(ref[30] == Rational(BigInt("8615841276005"), BigInt(14322)));
}

TEST_CASE("exact zeta at non-positive integers") {
  CHECK(scale::zeta_one_minus(1) == Rational(-1, 2));
  CHECK(scale::zeta_one_minus(2) == Rational(-1, 12));
  CHECK(scale::zeta_one_minus(3) == Rational(0));
  CHECK(scale::zeta_one_minus(4) == Rational(1, 120));
  for (int n = 2; n <= 30; ++n) CHECK(scale::zeta_one_minus(n) == zeta_one_minus_oracle(n));
}

TEST_CASE("derivative chain for every family") {
  for (Kind k : {Kind::q, Kind::q_tilde, Kind::q_check, Kind::bernoulli_periodised}) {
    auto fam = scale::build_scale(k, 30);
    for (int n = fam.start(); n < fam.n_max(); ++n) {
      CAPTURE(scale::to_string(k));
      CAPTURE(n);
      CHECK(fam.member(n + 1).derivative() == fam.member(n) * fam.derivative_constant(n));
    }
  }
  auto q = scale::build_scale(Kind::q, 5);
  auto qc = scale::build_scale(Kind::q_check, 5);
  for (int n = 1; n < 5; ++n) {
    CHECK(q.derivative_constant(n) == 1);
    CHECK(qc.derivative_constant(n) == n + 1);
  }
}

TEST_CASE("zero mean for q, q-tilde and q-check") {
  for (Kind k : {Kind::q, Kind::q_tilde, Kind::q_check}) {
    auto fam = scale::build_scale(k, 30);
    CHECK(fam.has_zero_mean());
    int first = k == Kind::q_check ? 1 : fam.start();
    for (int n = first; n <= 30; ++n) CHECK(integral01(fam.member(n)) == 0);
  }
  CHECK_FALSE(scale::build_scale(Kind::bernoulli_periodised, 3).has_zero_mean());
}

TEST_CASE("q-tilde leading terms and constant term") {
  auto qt = scale::build_scale(Kind::q_tilde, 30);
  for (int n = 2; n <= 30; ++n) {
    CAPTURE(n);
    const auto& m = qt.member(n);
    CHECK(m.degree() == n);
    CHECK(m.coeff(n) == Rational(1, n));
    CHECK(m.coeff(n - 1) == Rational(-1, 2));
  }
  for (int n = 2; n <= 20; ++n) {
    Rational sign = (n % 2 == 0) ? -1 : 1;
    CHECK(qt.member(n).coeff(0) == sign * zeta_one_minus_oracle(n));
  }
}

TEST_CASE("low-order members match the hand-derived polynomials") {
  CHECK(scale::build_scale(Kind::q, 4).member(4) ==
        poly({Rational(-1, 720), 0, Rational(1, 24), Rational(-1, 12), Rational(1, 24)}));
  CHECK(scale::qcheck(0) == poly({Rational(-1, 2), 1}));
  CHECK(scale::qcheck(1) == poly({Rational(1, 12), Rational(-1, 2), Rational(1, 2)}));
  CHECK(scale::qcheck(2) == poly({0, Rational(1, 6), Rational(-1, 2), Rational(1, 3)}));
  CHECK(scale::qcheck(3) == poly({Rational(-1, 120), 0, Rational(1, 4), Rational(-1, 2), Rational(1, 4)}));
}

TEST_CASE("q-check constant term is the phased zeta value at a negative integer") {
  for (int n = 0; n <= 20; ++n) {
    Rational phase = n % 2 == 0 ? 1 : -1;
    CHECK(scale::qcheck(n)(Rational(0)) == phase * scale::zeta_one_minus(n + 1));
  }
}

TEST_CASE("q-check at one half") {
  CHECK(scale::qcheck_at_half(1) == Rational(-1, 24));
  CHECK(scale::qcheck_at_half(2) == Rational(0));
  CHECK(abs(scale::qcheck_at_half(3)) == Rational(7, 960));
  CHECK(abs(scale::qcheck_at_half(5)) == Rational(31, 8064));
  for (int n = 1; n <= 12; ++n) CHECK(scale::qcheck_at_half(n) == scale::qcheck(n)(Rational(1, 2)));
}

TEST_CASE("periodic seam and periodic evaluation") {
  for (int n = 1; n <= 30; ++n) CHECK(scale::qcheck(n)(Rational(1)) == scale::qcheck(n)(Rational(0)));
  auto fam = scale::build_scale(Kind::q_check, 4);
  for (double x : {0.25, 0.8}) {
    for (int n = 1; n <= 4; ++n) {
      double base = fam.eval_periodic(n, x);
      CHECK(fam.eval_periodic(n, x + 7) == doctest::Approx(base).epsilon(1e-13));
      CHECK(scale::qcheck_periodic(n, x + 3) == doctest::Approx(base).epsilon(1e-13));
    }
  }
  CHECK(fam.eval_periodic(1, 5.0) == doctest::Approx(1.0 / 12));
}

TEST_CASE("power-sum polynomials against brute force") {
  for (int n = 1; n <= 6; ++n) {
    auto b = scale::sum_powers_poly(n);
    BigInt acc = 0;
    for (int k = 1; k <= 50; ++k) {
      BigInt term = 1;
      for (int e = 0; e < n - 1; ++e) term *= k;
      acc += term;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(b(Rational(k)) == Rational(acc));
    }
  }
}

TEST_CASE("double coefficients and Horner") {
  auto c = scale::qcheck_coeffs(3);
  REQUIRE(c.size() == 5);
  CHECK(scale::horner(c, 0.5) == doctest::Approx(scale::to_double(scale::qcheck_at_half(3))));
}

TEST_CASE("member index outside a family is an error") {
  auto fam = scale::build_scale(Kind::q, 3);
  CHECK(thrown_kind([&] { (void)fam.member(4); }) == ErrorKind::range);
  CHECK(thrown_kind([&] { (void)fam.member(0); }) == ErrorKind::range);
}
