#include "cesaro/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "cesaro/averaging.hpp"
#include "cesaro/combinat.hpp"
#include "cesaro/formal.hpp"
#include "cesaro/fourier.hpp"
#include "cesaro/scale.hpp"
#include "cesaro/zetafns.hpp"

namespace cesaro::suites {

using report::Case;
using report::SuiteReport;
using scale::Rational;
using scale::RationalPolynomial;

namespace {

constexpr double pi = special::pi;

// Collects cases; a throwing check becomes a failed case carrying the message.
class Builder {
public:
  explicit Builder(const SuiteOptions& opt) : opt_(opt) {}

  double tol(double fallback) const { return opt_.tol.value_or(fallback); }
  const SuiteOptions& options() const { return opt_; }

  void add(Case c) { cases_.push_back(std::move(c)); }
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      cases_.push_back({name, std::string("no error"), std::string(e.what()), INFINITY, 0.0, false});
    }
  }
  std::vector<Case> take() { return std::move(cases_); }

private:
  const SuiteOptions& opt_;
  std::vector<Case> cases_;
};

std::string fmt(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

std::string cfmt(cplx z) { return report::format_complex(z, 6); }

RationalPolynomial poly(std::initializer_list<Rational> c) { return RationalPolynomial(std::vector<Rational>(c)); }

double max_coeff_dev(const std::vector<formal::Coefficient>& got, const RationalPolynomial& want) {
  double dev = 0;
  std::map<int, cplx> seen;
  for (const auto& c : got) {
    if (c.log_power != 0 || c.power.imag() != 0 || c.power.real() != std::floor(c.power.real()))
      dev = std::max(dev, std::abs(c.value));
    else
      seen[static_cast<int>(c.power.real())] += c.value;
  }
  for (auto& [p, v] : seen) dev = std::max(dev, std::abs(v - scale::to_double(want.coeff(p))));
  for (int p = 0; p <= want.degree(); ++p)
    if (!seen.count(p)) dev = std::max(dev, std::abs(scale::to_double(want.coeff(p))));
  return dev;
}

// ---------------------------------------------------------------------------

void scale_part(Builder& b) {
  using scale::Kind;
  const int N = 30;
  for (Kind k : {Kind::q, Kind::q_tilde, Kind::q_check}) {
    auto fam = scale::build_scale(k, N);
    std::string tag = scale::to_string(k);
    bool chain = true, mean = true;
    for (int n = fam.start(); n < fam.n_max(); ++n)
      chain = chain && fam.member(n + 1).derivative() == fam.member(n) * fam.derivative_constant(n);
    for (int n = fam.start(); n <= fam.n_max(); ++n) mean = mean && fam.member(n).integral01() == 0;
    b.add(report::bool_case("scale/derivative_chain/" + tag, chain));
    b.add(report::bool_case("scale/zero_mean/" + tag, mean));
  }
  auto qt = scale::build_scale(Kind::q_tilde, N);
  bool lead = true;
  for (int n = 2; n <= N; ++n) {
    const auto& m = qt.member(n);
    lead = lead && m.degree() == n && m.coeff(n) == Rational(1, n) && m.coeff(n - 1) == Rational(-1, 2);
  }
  b.add(report::bool_case("scale/leading_terms/q_tilde", lead));
  for (int n = 2; n <= 20; ++n) {
    Rational want = scale::zeta_one_minus(n) * ((n % 2 == 1) ? 1 : -1);
    b.add(report::rational_case(fmt("scale/constant_term/q_tilde_%02.0f", n), want, qt.member(n).coeff(0)));
  }
  bool seam = true;
  for (int n = 1; n <= N; ++n) seam = seam && scale::qcheck(n)(Rational(1)) == scale::qcheck(n)(Rational(0));
  b.add(report::bool_case("scale/periodic_seam/q_check", seam));

  auto q4 = scale::build_scale(Kind::q, 4).member(4);
  auto want_q4 = poly({Rational(-1, 720), 0, Rational(1, 24), Rational(-1, 12), Rational(1, 24)});
  b.add(report::bool_case("scale/display/q4", q4 == want_q4));
  std::vector<RationalPolynomial> want_qc = {
      poly({Rational(1, 12), Rational(-1, 2), Rational(1, 2)}),
      poly({0, Rational(1, 6), Rational(-1, 2), Rational(1, 3)}),
      poly({Rational(-1, 120), 0, Rational(1, 4), Rational(-1, 2), Rational(1, 4)})};
  for (int n = 1; n <= 3; ++n)
    b.add(report::bool_case("scale/display/q_check_" + std::to_string(n), scale::qcheck(n) == want_qc[n - 1]));
}

void formal_part(Builder& b) {
  for (int n = 0; n <= 5; ++n) {
    b.guard("formal/alpha_minus_tau_power_" + std::to_string(n), [&] {
      auto s = formal::expand_binomial(formal::Subject::alpha, static_cast<double>(n), -2, n + 3);
      double dev = max_coeff_dev(formal::coefficients(s), scale::qcheck(n));
      b.add(report::bound_case("formal/alpha_minus_tau_power_" + std::to_string(n), dev, b.tol(1e-12)));
    });
  }
  for (cplx s : {cplx(-0.5), cplx(0.3, 0.4), cplx(-2.5)}) {
    std::string name = "formal/tau_minus_one_identity/s=" + cfmt(s);
    b.guard(name, [&] {
      auto t = formal::expand_tau_minus_alpha(-s, 0, 80);
      b.add(report::complex_case(name, special::zeta(s), formal::evaluate(t, 1.0), b.tol(1e-10)));
    });
  }
  formal::DrhoOptions one_sided;
  one_sided.j_min = 0;
  one_sided.left_tail = false;
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    std::string n0 = fmt("formal/stand_alone_zero/rho=0/alpha=%.1f", a);
    b.guard(n0, [&] {
      cplx d = formal::drho_qcheck(0, a) - formal::drho_qcheck(0, a, one_sided);
      b.add(report::complex_case(n0, a, d, b.tol(1e-9)));
    });
    std::string n1 = fmt("formal/stand_alone_zero/rho=1/alpha=%.1f", a);
    b.guard(n1, [&] {
      cplx d = formal::drho_qcheck(1, a) - formal::drho_qcheck(1, a, one_sided);
      b.add(report::complex_case(n1, -a * a / 4, d, b.tol(1e-9)));
    });
  }
  // i pi q-check_0 - zeta'(0) - ln Gamma(1 - alpha), zeta'(0) = -ln(2 pi)/2
  for (int i = 1; i <= 9; ++i) {
    double a = i / 10.0;
    std::string name = fmt("formal/drho_at_0/alpha=%.1f", a);
    b.guard(name, [&] {
      cplx want = cplx(0, pi) * (a - 0.5) + 0.5 * std::log(2 * pi) - std::lgamma(1 - a);
      b.add(report::complex_case(name, want, formal::drho_qcheck(0, a), b.tol(1e-9)));
    });
  }
}

void operators_part(Builder& b) {
  for (int n = 1; n <= 14; ++n)
    b.add(report::bool_case("cesaro/operator_identity/n=" + std::to_string(n), summation::operator_identity_check(n).equal));
  double step = 1.0 / 128;
  for (int n = 0; n <= 3; ++n)
    for (int r = 0; r <= 3; ++r) {
      std::string name = "cesaro/pn_identity/n=" + std::to_string(n) + "/r=" + std::to_string(r);
      b.guard(name, [&] { b.add(report::bound_case(name, summation::pn_identity_numeric(n, r, step, 1.0), b.tol(1e-5))); });
    }
  for (int n = 0; n <= 3; ++n) {
    std::string name = "cesaro/xq_identity/n=" + std::to_string(n);
    b.guard(name, [&] { b.add(report::bound_case(name, summation::xq_identity_numeric(n, step, 1.0), b.tol(1e-5))); });
  }
  // random term sums, fixed seed
  std::mt19937 gen(20240101);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const double powers[] = {0.0, 0.5, 1.0, 1.5, 2.0};
  for (int trial = 0; trial < 6; ++trial) {
    summation::TermSum t;
    for (int k = 0; k < 3; ++k) {
      summation::Term term;
      term.coeff = cplx(U(gen), U(gen));
      term.x_power = powers[gen() % 5];
      term.scale_index = static_cast<int>(gen() % 5) - 1;
      t.add(term);
    }
    std::string name = "cesaro/symbolic_vs_numeric/trial=" + std::to_string(trial);
    b.guard(name, [&] {
      auto sym = summation::apply_P_symbolic(t);
      auto num = summation::apply_P_numeric(summation::sample(t, 52.0, step), 1);
      double dev = 0;
      for (double X : {10.25, 25.5, 50.75}) {
        cplx s = sym.eval(X);
        dev = std::max(dev, std::abs(s - num.at(X)) / std::max(1.0, std::abs(s)));
      }
      b.add(report::bound_case(name, dev, b.tol(1e-6)));
    });
  }
}

void limits_part(Builder& b) {
  const auto& o = b.options();
  for (cplx s : {cplx(-2.5), cplx(-2), cplx(-1), cplx(-0.5), cplx(0.3), cplx(0.3, 0.7)}) {
    std::string name = "cesaro/zeta_from_psum/s=" + cfmt(s);
    b.guard(name, [&] {
      auto v = zetafns::hurwitz_cesaro(0.0, s, o.x_max, o.step);
      b.add(report::complex_case(name, special::zeta(s), v.value, b.tol(1e-3)));
    });
  }
  for (cplx z0 : {cplx(0.0), cplx(0.7, 0.3)}) {
    for (int n = 0; n <= 2; ++n)
      for (int r = 0; r <= 2; ++r) {
        std::string name = std::string(z0 == cplx(0.0) ? "cesaro/theorem1" : "cesaro/theorem1a") + "/n=" +
                           std::to_string(n) + "/r=" + std::to_string(r);
        b.guard(name, [&] {
          auto f = summation::sample(
              [&](double X, bool left) -> cplx {
                double k = std::floor(X), a = X - k;
                if (left && X >= 1) {
                  k -= 1;
                  a = 1;
                }
                return std::pow(k, n) * std::pow(a, r);
              },
              o.x_max, o.step, z0);
          // (-1)^n sum_j C(n, j) z0^{n-j} / (r + j + 1)
          cplx want = 0;
          double c = 1;
          for (int j = 0; j <= n; ++j) {
            want += c * std::pow(z0, n - j) / static_cast<double>(r + j + 1);
            c = c * (n - j) / (j + 1);
          }
          if (n % 2) want = -want;
          auto L = summation::cesaro_limit(f, summation::discrete_poly(n));
          b.add(report::complex_case(name, want, L.estimate, b.tol(1e-3)));
        });
      }
  }
}

void zetafns_part(Builder& b) {
  const auto& o = b.options();
  const std::pair<cplx, cplx> pts[] = {{0.3, -0.5},         {0.25, 0.3},        {0.5, -1.5},
                                       {cplx(0.7, 0.2), -0.3}, {0.6, -2.5}, {0.1, cplx(0.5, 0.5)}};
  for (auto [z0, s] : pts) {
    std::string name = "zetafns/taylor_vs_cesaro/z0=" + cfmt(z0) + "/s=" + cfmt(s);
    b.guard(name, [&] {
      auto t = zetafns::hurwitz_taylor(z0, s);
      auto c = zetafns::hurwitz_cesaro(z0, s, o.x_max, o.step);
      b.add(report::complex_case(name, t.value, c.value, t.error_estimate + c.error_estimate + 1e-12));
    });
  }
  for (cplx s : {cplx(-0.5), cplx(0.3), cplx(-1.5, 0.5), cplx(-2)}) {
    std::string name = "zetafns/integral_over_z0/s=" + cfmt(s);
    b.guard(name, [&] { b.add(report::complex_case(name, 0.0, zetafns::hurwitz_integral_check(s).value, b.tol(1e-6))); });
  }
  for (cplx s : {cplx(-1), cplx(-3), cplx(-2.5), cplx(0.5), cplx(0.3, 0.7), cplx(2.5)}) {
    for (double X : {10.25, 75.5}) {
      std::string name = "zetafns/psum_identity_rel/s=" + cfmt(s) + fmt("/X=%g", X);
      b.guard(name, [&] {
        int J = zetafns::psum_expansion_order(s, X, 1e-14);
        cplx lhs = zetafns::psum_eval(0.0, s, X);
        cplx rhs = cplx(zetafns::psum_term_expansion(s, J).eval_extended(X));
        b.add(report::bound_case(name, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), b.tol(1e-9)));
      });
    }
  }
  for (cplx s : {cplx(1.5), cplx(-0.5, 1.0), cplx(0.5)}) {
    std::string name = "zetafns/euler_maclaurin_term_for_term/s=" + cfmt(s);
    b.guard(name, [&] {
      zetafns::EMFunction f;
      f.max_order = 16;
      f.derivative = [s](double x, int order) {
        cplx c = 1.0;
        for (int i = 0; i < order; ++i) c *= (-s - static_cast<double>(i));
        return c * std::exp((-s - static_cast<double>(order)) * std::log(x));
      };
      f.antiderivative = [s](double x) { return std::exp((1.0 - s) * std::log(x)) / (1.0 - s); };
      auto em = zetafns::euler_maclaurin(f, 12, 6);
      double biggest = 0, dev = 0;
      for (auto v : em.classical) biggest = std::max(biggest, std::abs(v));
      for (size_t r = 0; r < em.classical.size(); ++r) {
        double d = std::abs(em.classical[r] - em.compact[r]);
        dev = std::max(dev, em.classical[r] == cplx(0.0) ? d / biggest : d / std::abs(em.classical[r]));
      }
      b.add(report::bound_case(name, dev, b.tol(1e-13)));
    });
  }
}

void fourier_part(Builder& b) {
  for (cplx rho : {cplx(0.5), cplx(1), cplx(2), cplx(1.3, 0.4), cplx(-0.5)})
    for (long long n : {1LL, -1LL, 2LL, -2LL, 5LL}) {
      std::string name = "fourier/closed_vs_quadrature/rho=" + cfmt(rho) + "/n=" + std::to_string(n);
      b.guard(name, [&] {
        auto q = fourier::fourier_coeff_quadrature(rho, n);
        b.add(report::complex_case(name, fourier::fourier_coeff_closed(rho, n), q.value, b.tol(1e-7)));
      });
    }
  b.guard("fourier/reconstruct/q_check_2(0.25)", [&] {
    double want = scale::to_double(scale::qcheck(2)(Rational(1, 4)));
    b.add(report::complex_case("fourier/reconstruct/q_check_2(0.25)", want, fourier::reconstruct(2, 0.25, 2000).value,
                               b.tol(1e-8)));
  });
  b.guard("fourier/reconstruct/q_check_1(0.5)", [&] {
    b.add(report::complex_case("fourier/reconstruct/q_check_1(0.5)", -1.0 / 24, fourier::reconstruct(1, 0.5, 2000).value,
                               b.tol(1e-7)));
  });
  for (cplx s : {cplx(-1), cplx(-2), cplx(0.3, 0.4), cplx(-2.5), cplx(0.5, 14)}) {
    std::string name = "fourier/functional_equation/s=" + cfmt(s);
    b.guard(name, [&] { b.add(report::complex_case(name, 0.0, fourier::functional_equation_residual(s), b.tol(1e-9))); });
  }
  b.guard("fourier/zeta(-1)", [&] {
    b.add(report::complex_case("fourier/zeta(-1)", -1.0 / 12, special::zeta(-1.0), b.tol(1e-12)));
  });
  for (const auto& row : combinat::theta_coefficient_check({1, 3, 5}))
    b.add(report::rational_case("fourier/theta_coefficient/n=" + std::to_string(row.n), row.qcheck_half,
                                2 * row.n * row.theta_coeff));
}

void combinat_part(Builder& b) {
  const std::vector<std::vector<int>> display = {{1},
                                                 {1, 1},
                                                 {1, 3, 1},
                                                 {1, 6, 7, 1},
                                                 {1, 10, 25, 15, 1},
                                                 {1, 15, 65, 90, 31, 1},
                                                 {1, 21, 140, 350, 301, 63, 1}};
  combinat::Triangle t(7);
  for (int n = 1; n <= 7; ++n) {
    bool eq = static_cast<int>(t.row(n).size()) == n;
    for (int m = 0; eq && m < n; ++m) eq = t.row(n)[m] == display[n - 1][m];
    b.add(report::bool_case("combinat/triangle_row/" + std::to_string(n), eq));
  }
  bool ff = true;
  for (int n = 0; n <= 10; ++n)
    for (int j = 0; j <= 10; ++j) ff = ff && combinat::alpha_ddalpha_apply(n, j) == boost::multiprecision::pow(scale::BigInt(j), n);
  b.add(report::bool_case("combinat/falling_factorial_identity", ff));

  for (cplx rho : {cplx(0.5), cplx(-0.3), cplx(0.2, 0.1)}) {
    std::string tag = "/rho=" + cfmt(rho);
    b.guard("combinat/binom_asym" + tag, [&] {
      auto f1 = combinat::binom_asym_fit(rho, 1000, 10000);
      auto f2 = combinat::binom_asym_fit(rho, 10000, 100000);
      b.add(report::complex_case("combinat/binom_asym_exponent" + tag, -rho - 1.0, f1.exponent, b.tol(1e-3)));
      b.add(report::bound_case("combinat/binom_asym_C_stability" + tag, std::abs(f1.C - f2.C) / std::abs(f1.C),
                               b.tol(1e-6)));
      b.add(report::complex_case("combinat/binom_asym_C_vs_rgamma" + tag, special::rgamma(-rho), f1.C, b.tol(1e-6)));
    });
  }
  for (double x : {0.3, 0.5}) {
    std::string tag = fmt("/rho+1=%.1f", x);
    b.guard("combinat/ln_binom" + tag, [&] {
      auto L = combinat::ln_binom_expansion_check(x - 1.0);
      b.add(report::complex_case("combinat/ln_binom_j^-1" + tag, L.c1_expected, L.c1_fit, b.tol(1e-4)));
      b.add(report::complex_case("combinat/ln_binom_j^-2" + tag, L.c2_expected, L.c2_fit, b.tol(1e-4)));
    });
  }
}

void singular_part(Builder& b) {
  b.guard("fourier/singular", [&] {
    auto rep = fourier::singular_limit_diagnostic(-0.9, {0.99, 0.999, 0.9999});
    for (const auto& row : rep.rows) {
      std::string tag = fmt("/rho=-0.9/alpha=%g", row.alpha);
      b.add(report::bound_case("fourier/singular/difference" + tag, std::abs(row.difference), b.tol(5.0)));
      if (row.alpha == 0.999)
        b.add(report::bool_case("fourier/singular/model_exceeds_100" + tag, std::abs(row.model) > 100));
    }
  });
}

using PartFn = void (*)(Builder&);

const std::vector<std::pair<std::string, PartFn>>& parts() {
  static const std::vector<std::pair<std::string, PartFn>> p = {
      {"scale", scale_part},       {"formal", formal_part},   {"cesaro.operators", operators_part},
      {"cesaro.limits", limits_part}, {"zetafns", zetafns_part}, {"fourier.coefficients", fourier_part},
      {"combinat", combinat_part}, {"fourier.singular", singular_part}};
  return p;
}

}  // namespace

const std::vector<std::string>& part_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : parts()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteReport run_part(const std::string& part, const SuiteOptions& opt) {
  for (const auto& [name, fn] : parts()) {
    if (name != part) continue;
    auto t0 = std::chrono::steady_clock::now();
    Builder b(opt);
    fn(b);
    SuiteReport r{name, b.take(), 0};
    r.sort_cases();
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw Error(ErrorKind::domain, "unknown suite part: " + part);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"scale", "formal", "cesaro", "zetafns", "fourier", "combinat"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt) {
  bool known = false;
  for (const auto& s : suite_names()) known = known || s == suite;
  if (!known) throw Error(ErrorKind::domain, "unknown suite: " + suite);
  SuiteReport out{suite, {}, 0};
  for (const auto& p : part_names()) {
    if (p != suite && p.rfind(suite + ".", 0) != 0) continue;
    auto r = run_part(p, opt);
    out.cases.insert(out.cases.end(), r.cases.begin(), r.cases.end());
    out.runtime_ms += r.runtime_ms;
  }
  out.sort_cases();
  return out;
}

std::vector<SuiteReport> run(const std::string& suite, const SuiteOptions& opt) {
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const auto& s : suite_names()) out.push_back(run_suite(s, opt));
  } else {
    out.push_back(run_suite(suite, opt));
  }
  return out;
}

}  // namespace cesaro::suites
