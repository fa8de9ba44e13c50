#include <cmath>

#include "cesaro/formal.hpp"
#include "cesaro/fourier.hpp"
#include "cesaro/scale.hpp"
#include "helpers.hpp"

using namespace cesaro;
using testing::cplx;
using testing::rel_err;
using testing::thrown_kind;

namespace {
constexpr double pi = special::pi;
}

TEST_CASE("closed-form coefficients match the Bernoulli Fourier series") {
  // q-check_1 = B_2 / 2 and q-check_2 = B_3 / 3 (as polynomials on [0, 1))
  for (long long n : {1, 2, 3, -4}) {
    double nn = static_cast<double>(n);
    CHECK(rel_err(fourier::fourier_coeff_closed(1.0, n), 1.0 / (4 * pi * pi * nn * nn)) < 1e-14);
    // B_m(x) = -m!/(2 pi i)^m sum_{k != 0} e^{2 pi i k x}/k^m
    CHECK(rel_err(fourier::fourier_coeff_closed(2.0, n), cplx(0, -1) / (4 * pi * pi * pi * nn * nn * nn)) < 1e-14);
  }
  CHECK(fourier::fourier_coeff_closed(0.7, 0) == cplx(0.0));
}

TEST_CASE("closed form against quadrature") {
  for (cplx rho : {cplx(0.5), cplx(1), cplx(2), cplx(1.3, 0.4), cplx(-0.5), cplx(-0.9)}) {
    for (long long n : {1, -1, 2, -2, 5}) {
      auto q = fourier::fourier_coeff_quadrature(rho, n);
      cplx c = fourier::fourier_coeff_closed(rho, n);
      CAPTURE(rho);
      CAPTURE(n);
      CHECK(std::abs(q.value - c) < 1e-7);
      CHECK_FALSE(q.accuracy_warning);
      CHECK(q.error_bound < 1e-7);
    }
  }
}

TEST_CASE("coefficients of real rho are conjugate symmetric up to the phase") {
  // e^{-i pi rho} q-check_rho is real for real rho, so a_{-n} = e^{2 pi i rho} conj(a_n)
  for (double rho : {0.5, 1.0, 2.0, 2.5, -0.3}) {
    for (long long n = 1; n <= 6; ++n) {
      cplx a = fourier::fourier_coeff_closed(rho, n), b = fourier::fourier_coeff_closed(rho, -n);
      CAPTURE(rho);
      CAPTURE(n);
      CHECK(rel_err(b, special::exp_i_pi(2 * rho) * std::conj(a)) < 1e-12);
      if (special::as_integer(rho)) CHECK(rel_err(b, std::conj(a)) < 1e-12);
    }
  }
  auto q = fourier::fourier_coeff_quadrature(0.5, -3);
  CHECK(std::abs(q.value - special::exp_i_pi(1.0) * std::conj(fourier::fourier_coeff_quadrature(0.5, 3).value)) < 1e-10);
}

TEST_CASE("coefficient sets are complete and ordered") {
  auto set = fourier::coefficient_set(cplx(0.5, 0.1), 12);
  CHECK(set.a.size() == 25);
  CHECK(set.a.begin()->first == -12);
  CHECK(set.a.at(0) == cplx(0.0));
  for (const auto& [n, a] : set.a) CHECK(a == fourier::fourier_coeff_closed(set.rho, n));
}

TEST_CASE("partial Fourier sums reconstruct q-check") {
  auto r = fourier::reconstruct(2.0, 0.25, 20000);
  CHECK(std::abs(r.value - cplx(1.0 / 64)) < 1e-8);
  CHECK_FALSE(r.conditional);
  CHECK(std::abs(r.value - cplx(1.0 / 64)) <= r.tail_bound);
  auto r1 = fourier::reconstruct(1.0, 0.5, 20000);
  CHECK(std::abs(r1.value - cplx(-1.0 / 24)) < 1e-7);
  auto c = fourier::reconstruct(-0.5, 0.3, 100);
  CHECK(c.conditional);
  CHECK(std::isinf(c.tail_bound));
}

TEST_CASE("reconstruction at alpha = 0 gives the phased zeta value") {
  for (double rho : {0.5, 2.5}) {
    auto r = fourier::reconstruct(rho, 0.0, 20000);
    cplx want = special::exp_i_pi(rho) * special::zeta(-rho);
    CAPTURE(rho);
    CHECK(std::abs(r.value - want) <= r.tail_bound);
  }
}

TEST_CASE("Parseval for integer rho") {
  auto q2 = scale::qcheck(2);
  double exact = scale::to_double((q2 * q2).integral01());
  auto p = fourier::parseval(2, 10000);
  CHECK(std::abs(p.exact - exact) < 1e-16);
  CHECK(std::abs(p.partial_sum - exact) < 1e-6);
  CHECK(p.partial_sum <= exact * (1 + 1e-14));
}

TEST_CASE("functional equation residual") {
  for (cplx s : {cplx(-1), cplx(0.3, 2.0), cplx(-2.5), cplx(0.5), cplx(3.7, -1.0)}) {
    CAPTURE(s);
    CHECK(std::abs(fourier::functional_equation_residual(s)) < 1e-9);
  }
  CHECK(std::abs(special::zeta(-1.0) - cplx(-1.0 / 12)) < 1e-15);
  // negative even s: both sides vanish and the residual is zeta(s) itself
  CHECK(std::abs(fourier::functional_equation_residual(-4.0)) < 1e-15);
  CHECK(thrown_kind([] { fourier::functional_equation_residual(2.0); }) == ErrorKind::indeterminate);
}

TEST_CASE("singular limit near the endpoint for rho = -0.9") {
  auto rep = fourier::singular_limit_diagnostic(-0.9, {0.9, 0.99, 0.999, 0.9999});
  REQUIRE(rep.rows.size() == 4);
  for (const auto& row : rep.rows) {
    CAPTURE(row.alpha);
    if (row.alpha >= 0.99) CHECK(std::abs(row.difference) < 5);
    CHECK(std::abs(row.value - row.model - row.difference) < 1e-12 * std::max(1.0, std::abs(row.value)));
    CHECK(rel_err(row.value, formal::qcheck_rho(-0.9, row.alpha)) < 1e-12);
  }
  CHECK(std::abs(rep.rows[2].model) > 100);
  // the model keeps growing while the difference stays bounded
  CHECK(std::abs(rep.rows[3].model) > std::abs(rep.rows[2].model));
}

TEST_CASE("value over leading model near rho = -1") {
  auto rep = fourier::singular_limit_diagnostic(-0.99, {0.99, 0.9999});
  REQUIRE(rep.rows.size() == 2);
  cplx r = rep.rows[0].value / rep.rows[0].model;
  CHECK(std::abs(r.imag()) < 1e-12);
  CHECK(r.real() >= 0.5);
  CHECK(r.real() <= 2.0);
  CHECK(std::abs(rep.rows[1].value / rep.rows[1].model - 1.0) < 1e-2);
}

TEST_CASE("shifted integral probe lines up with the closed form at k = 0") {
  auto probe = fourier::shifted_integral_probe(0.5, 1, 3);
  REQUIRE(probe.size() == 4);
  CHECK(probe[0].k == 0);
  CHECK(std::abs(probe[0].quadrature - probe[0].closed) < 1e-7);
}
