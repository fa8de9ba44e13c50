#include <cmath>

#include "cesaro/zetafns.hpp"
#include "helpers.hpp"

using namespace cesaro;
using testing::cplx;
using testing::rel_err;
using testing::thrown_kind;

namespace {

// Brute-force sum_{j=1}^{floor X} (z0 + j)^{-s}.
cplx direct_psum(cplx z0, cplx s, double X) {
  cplx acc = 0;
  for (long long j = 1; j <= static_cast<long long>(std::floor(X)); ++j)
    acc += std::exp(-s * std::log(z0 + static_cast<double>(j)));
  return acc;
}

zetafns::EMFunction power_fn(cplx s) {
  zetafns::EMFunction f;
  f.derivative = [s](double x, int r) {
    cplx c = 1.0;
    for (int i = 0; i < r; ++i) c *= (-s - static_cast<double>(i));
    return c * std::pow(cplx(x), -s - static_cast<double>(r));
  };
  f.antiderivative = [s](double x) { return std::pow(cplx(x), 1.0 - s) / (1.0 - s); };
  f.max_order = 40;
  return f;
}

struct HurwitzRef {
  cplx z0, s, value;
};

// sum_{n >= 1} (z0 + n)^{-s}, frozen from 30-digit evaluations.
const HurwitzRef kRefs[] = {
    {0.3, -0.5, -0.45436374242025078},
    {{0.7, 0.3}, 0.3, {-1.6421963025782551, -0.28024116249761698}},
    {-0.4, -1.5, 0.023054606893518333},
    {{0.0, 0.5}, {0.3, 0.7}, {-0.057775735877267635, -1.4067669411898983}},
    {2.5, -0.5, -3.4521020170817313},
    {0.25, 2.0, 1.1973291545071107},
};

}  // namespace

TEST_CASE("p-sums against brute force") {
  CHECK(zetafns::psum_eval(0.0, -1.0, 3.5) == cplx(6.0));
  CHECK(zetafns::psum_eval(0.0, 2.0, 0.9) == cplx(0.0));
  for (cplx z0 : {cplx(0.0), cplx(0.3, -0.2)})
    for (cplx s : {cplx(-1.5), cplx(0.5, 0.5), cplx(2.0)})
      CHECK(rel_err(zetafns::psum_eval(z0, s, 200.7), direct_psum(z0, s, 200.7)) < 1e-12);
  zetafns::PSum p{0.0, -2.0};
  CHECK(p(4.0) == cplx(30.0));
}

TEST_CASE("p-sum term expansion reproduces the exact p-sum") {
  for (cplx s : {cplx(-3), cplx(-1), cplx(0.5), cplx(0.3, 0.7), cplx(-2.5)}) {
    for (double X : {20.25, 75.5}) {
      int J = zetafns::psum_expansion_order(s, X, 1e-14);
      auto t = zetafns::psum_term_expansion(s, J);
      cplx want = zetafns::psum_eval(0.0, s, X);
      CAPTURE(s);
      CAPTURE(X);
      CHECK(std::abs(t.eval(X) - want) <= 1e-9 * std::max(1.0, std::abs(want)));
    }
  }
  CHECK(zetafns::psum_expansion_order(-3.0, 50.0, 1e-14) == 3);
  // integer s: the expansion is the Faulhaber polynomial, exact to rounding
  auto t = zetafns::psum_term_expansion(-2.0, 2);
  CHECK(std::abs(t.eval(10.0) - cplx(385.0)) < 1e-10);
}

TEST_CASE("Euler-Maclaurin classical and compact forms agree term for term") {
  zetafns::EMFunction square;
  square.derivative = [](double x, int r) -> cplx { return r == 0 ? x * x : r == 1 ? 2 * x : r == 2 ? 2.0 : 0.0; };
  square.antiderivative = [](double x) -> cplx { return x * x * x / 3; };
  square.max_order = 40;
  zetafns::EMFunction decay;
  decay.derivative = [](double x, int r) -> cplx { return (r % 2 ? -1.0 : 1.0) * std::exp(-x); };
  decay.antiderivative = [](double x) -> cplx { return -std::exp(-x); };
  decay.max_order = 40;
  for (const auto* f : {&square, &decay}) {
    auto em = zetafns::euler_maclaurin(*f, 20, 6);
    REQUIRE(em.classical.size() == em.compact.size());
    double scale = 0;
    for (cplx c : em.classical) scale = std::max(scale, std::abs(c));
    for (size_t r = 0; r < em.classical.size(); ++r) {
      CAPTURE(r);
      // odd Bernoulli numbers vanish exactly; zeta at negative even integers only to rounding
      if (std::abs(em.classical[r]) == 0)
        CHECK(std::abs(em.compact[r]) < 1e-13 * scale);
      else
        CHECK(rel_err(em.compact[r], em.classical[r]) < 1e-13);
    }
  }
  auto em = zetafns::euler_maclaurin(power_fn(1.5), 20, 6);
  for (size_t r = 0; r < em.classical.size(); ++r) CHECK(rel_err(em.compact[r], em.classical[r]) < 1e-13);
}

TEST_CASE("Euler-Maclaurin sums and constants") {
  zetafns::EMFunction square;
  square.derivative = [](double x, int r) -> cplx { return r == 0 ? x * x : r == 1 ? 2 * x : r == 2 ? 2.0 : 0.0; };
  square.antiderivative = [](double x) -> cplx { return x * x * x / 3; };
  square.max_order = 40;
  auto em = zetafns::euler_maclaurin(square, 20, 3);
  CHECK(std::abs(em.classical_value() - cplx(2870.0)) < 1e-8);
  CHECK(std::abs(em.compact_value() - cplx(2870.0)) < 1e-8);
  for (cplx s : {cplx(1.5), cplx(2.0), cplx(3.0, 1.0)}) {
    auto e = zetafns::euler_maclaurin(power_fn(s), 20, 6);
    CAPTURE(s);
    CHECK(std::abs(e.constant_part - special::zeta(s)) < 1e-10);
  }
}

TEST_CASE("Hurwitz routes against frozen values") {
  for (const auto& r : kRefs) {
    CAPTURE(r.z0);
    CAPTURE(r.s);
    auto v = zetafns::hurwitz(r.z0, r.s);
    CHECK(rel_err(v.value, r.value) < 1e-11);
    auto a = zetafns::hurwitz_asymptotic(r.z0, r.s);
    CHECK(std::abs(a.value - r.value) < 1e-11 * std::max(1.0, std::abs(r.value)));
    if (std::abs(r.z0) <= 1) {
      auto t = zetafns::hurwitz_taylor(r.z0, r.s);
      CHECK(t.route == "taylor");
      CHECK(std::abs(t.value - r.value) <= t.error_estimate + 1e-13 * std::abs(r.value));
    }
  }
  CHECK(zetafns::hurwitz(2.5, -0.5).route == "asymptotic");
}

TEST_CASE("Hurwitz at non-positive integer s is a finite polynomial") {
  // sum_{n>=1} (z + n)^1 regularised = zeta(-1, 1 + z) = -B_2(1 + z)/2
  for (double z : {0.0, 0.3, -0.6}) {
    double a = 1 + z;
    double want = -(a * a - a + 1.0 / 6) / 2;
    CHECK(std::abs(zetafns::hurwitz_taylor(z, -1.0).value - cplx(want)) < 1e-14);
  }
}

TEST_CASE("Cesaro route recovers zeta within its own error estimate") {
  for (cplx s : {cplx(-2.5), cplx(-1), cplx(-0.5), cplx(0.3)}) {
    auto v = zetafns::hurwitz_cesaro(0.0, s, 1000.0);
    CAPTURE(s);
    CHECK(v.route == "cesaro");
    CHECK(std::abs(v.value - special::zeta(s)) <= v.error_estimate);
    CHECK(v.error_estimate < 1e-3);
  }
}

TEST_CASE("Cesaro and Taylor routes agree away from zero offset") {
  const std::pair<cplx, cplx> pts[] = {{0.3, -0.5}, {cplx(0.7, 0.2), -0.3}, {0.1, cplx(0.5, 0.5)}};
  for (auto [z0, s] : pts) {
    auto t = zetafns::hurwitz_taylor(z0, s);
    auto c = zetafns::hurwitz_cesaro(z0, s, 1000.0);
    CHECK(std::abs(t.value - c.value) <= t.error_estimate + c.error_estimate + 1e-12);
  }
}

TEST_CASE("Hurwitz integrates to zero over a unit offset interval") {
  for (cplx s : {cplx(-0.5), cplx(0.3), cplx(-1.5, 0.5), cplx(-2)}) {
    auto v = zetafns::hurwitz_integral_check(s);
    CHECK(std::abs(v.value) < 1e-6);
  }
  CHECK(thrown_kind([] { zetafns::hurwitz_integral_check(1.5); }) == ErrorKind::domain);
}

TEST_CASE("route errors") {
  CHECK(thrown_kind([] { zetafns::hurwitz_asymptotic(0.2, 1.0); }) == ErrorKind::pole);
  CHECK_THROWS_AS(zetafns::hurwitz_taylor(1.5, 0.5), cesaro::Error);
}
