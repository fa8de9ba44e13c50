#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cesaro/averaging.hpp"
#include "cesaro/combinat.hpp"
#include "cesaro/formal.hpp"
#include "cesaro/fourier.hpp"
#include "cesaro/report.hpp"
#include "cesaro/suites.hpp"
#include "cesaro/zetafns.hpp"

using namespace cesaro;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::optional<double> tol;
  double x_max = 2000;
  double step = 1.0 / 128;
  std::string json_path;
  std::string csv_path;
};

double round12(double x) {
  if (!std::isfinite(x) || x == 0) return x;
  return std::strtod(report::format_real(x).c_str(), nullptr);
}

json cjson(cplx z) { return json{{"re", round12(z.real())}, {"im", round12(z.imag())}}; }

std::string fmt(cplx z) { return report::format_complex(z); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::domain, "cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

// JSON to stdout when `to_stdout`, and to --json <path> when given.
void emit_json(const Globals& g, const json& j, bool to_stdout) {
  if (to_stdout) std::cout << j.dump(2) << "\n";
  if (!g.json_path.empty()) write_file(g.json_path, j.dump(2));
}

void emit_csv(const Globals& g, const std::string& csv, bool to_stdout) {
  if (to_stdout) std::cout << csv;
  if (!g.csv_path.empty()) write_file(g.csv_path, csv);
}

cplx parse(const std::string& s) { return report::parse_complex(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised Cesaro summation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  double tol_value = 0;
  auto* tol_opt = app.add_option("--tol", tol_value, "Override suite tolerances")->check(CLI::PositiveNumber);
  app.add_option("--xmax", g.x_max, "Cesaro horizon X_max")->check(CLI::PositiveNumber);
  app.add_option("--step", g.step, "Grid step, 1/2^m");
  app.add_option("--json", g.json_path, "Write JSON output to this path");
  app.add_option("--csv", g.csv_path, "Write CSV output to this path");

  std::function<int()> action;

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite)->check(CLI::IsMember({"scale", "formal", "cesaro", "zetafns", "fourier", "combinat", "all"}));
  verify->callback([&] {
    action = [&] {
      suites::SuiteOptions o;
      o.tol = g.tol;
      o.x_max = g.x_max;
      o.step = g.step;
      auto reports = suites::run(suite, o);
      bool ok = true;
      for (const auto& r : reports) {
        for (const auto& c : r.cases)
          std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  err=" << report::format_real(c.abs_err)
                    << " tol=" << report::format_real(c.tol) << "\n";
        std::cout << r.suite << ": " << (r.cases.size() - r.failures()) << "/" << r.cases.size() << " passed in "
                  << r.runtime_ms << " ms\n";
        ok = ok && r.passed();
      }
      if (!g.json_path.empty()) write_file(g.json_path, report::to_json(reports));
      return ok ? 0 : 1;
    };
  });

  // zeta
  auto* zeta = app.add_subcommand("zeta", "Riemann zeta");
  std::string s_text;
  zeta->add_option("--s", s_text)->required();
  zeta->callback([&] {
    action = [&] {
      cplx v = special::zeta(parse(s_text));
      std::cout << fmt(v) << "\n";
      emit_json(g, {{"s", cjson(parse(s_text))}, {"value", cjson(v)}}, false);
      return 0;
    };
  });

  // hurwitz
  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz zeta sum_{n>=1} (z0 + n)^{-s}");
  std::string z0_text = "0", route = "taylor";
  hurwitz->add_option("--z0", z0_text)->required();
  hurwitz->add_option("--s", s_text)->required();
  hurwitz->add_option("--route", route)->check(CLI::IsMember({"taylor", "cesaro", "asymptotic", "auto"}));
  hurwitz->callback([&] {
    action = [&] {
      cplx z0 = parse(z0_text), s = parse(s_text);
      zetafns::RouteValue v = route == "taylor"   ? zetafns::hurwitz_taylor(z0, s)
                              : route == "cesaro" ? zetafns::hurwitz_cesaro(z0, s, g.x_max, g.step)
                              : route == "asymptotic" ? zetafns::hurwitz_asymptotic(z0, s)
                                                      : zetafns::hurwitz(z0, s);
      emit_json(g, {{"value", cjson(v.value)}, {"route", v.route}, {"error_estimate", round12(v.error_estimate)}}, true);
      return 0;
    };
  });

  // psum
  auto* psum = app.add_subcommand("psum", "p-sum sum_{j<=X} (z0 + j)^{-s}");
  std::string x_text;
  z0_text = "0";
  psum->add_option("--z0", z0_text);
  psum->add_option("--s", s_text)->required();
  psum->add_option("--X", x_text)->required();
  psum->callback([&] {
    action = [&] {
      cplx v = zetafns::psum_eval(parse(z0_text), parse(s_text), std::stod(x_text));
      std::cout << fmt(v) << "\n";
      emit_json(g, {{"value", cjson(v)}}, false);
      return 0;
    };
  });

  // qrho
  auto* qrho = app.add_subcommand("qrho", "q-check_rho(alpha)");
  std::string rho_text;
  double alpha = 0;
  qrho->add_option("--rho", rho_text)->required();
  qrho->add_option("--alpha", alpha)->required();
  qrho->callback([&] {
    action = [&] {
      cplx rho = parse(rho_text);
      cplx v = formal::qcheck_rho(rho, alpha);
      std::cout << fmt(v) << "\n";
      json j{{"rho", cjson(rho)}, {"alpha", alpha}, {"value", cjson(v)}};
      if (auto n = special::as_integer(rho); n && *n >= 0)
        j["polynomial"] = scale::qcheck(static_cast<int>(*n)).to_strings();
      emit_json(g, j, false);
      return 0;
    };
  });

  // fourier, fourier recon
  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier coefficients a_n(rho)");
  std::vector<long long> ns;
  fourier_cmd->add_option("--rho", rho_text);
  fourier_cmd->add_option("--n", ns)->delimiter(',');
  auto* recon = fourier_cmd->add_subcommand("recon", "Partial Fourier sum of q-check_rho");
  long long N = 2000;
  recon->add_option("--rho", rho_text)->required();
  recon->add_option("--alpha", alpha)->required();
  recon->add_option("--N", N);
  recon->callback([&] {
    action = [&] {
      auto r = fourier::reconstruct(parse(rho_text), alpha, N);
      std::cout << fmt(r.value) << "\n";
      if (r.conditional) std::cerr << "warning: Re(rho) <= 0, convergence is conditional; no tail bound\n";
      emit_json(g, {{"value", cjson(r.value)}, {"tail_bound", r.conditional ? json("inf") : json(round12(r.tail_bound))}},
                false);
      return 0;
    };
  });
  fourier_cmd->callback([&] {
    if (recon->parsed()) return;
    if (rho_text.empty() || ns.empty()) throw CLI::ValidationError("fourier", "--rho and --n are required");
    action = [&] {
      cplx rho = parse(rho_text);
      std::ostringstream csv;
      csv << "n,re,im\n";
      json rows = json::array();
      for (long long n : ns) {
        cplx a = fourier::fourier_coeff_closed(rho, n);
        csv << n << "," << report::format_real(a.real()) << "," << report::format_real(a.imag()) << "\n";
        rows.push_back({{"n", n}, {"a", cjson(a)}});
      }
      emit_csv(g, csv.str(), true);
      emit_json(g, {{"rho", cjson(rho)}, {"coefficients", rows}}, false);
      return 0;
    };
  });

  // triangle
  auto* tri = app.add_subcommand("triangle", "Coefficients of (alpha d/dalpha)^n in powers of eps");
  int rows = 7;
  tri->add_option("--rows", rows)->check(CLI::Range(1, 200));
  tri->callback([&] {
    action = [&] {
      combinat::Triangle t(rows);
      std::ostringstream csv;
      json jr = json::array();
      for (int n = 1; n <= rows; ++n) {
        json r = json::array();
        for (size_t m = 0; m < t.row(n).size(); ++m) {
          csv << (m ? "," : "") << t.row(n)[m];
          r.push_back(t.row(n)[m].str());
        }
        csv << "\n";
        jr.push_back(r);
      }
      emit_csv(g, csv.str(), true);
      emit_json(g, {{"rows", jr}}, false);
      return 0;
    };
  });

  // binom-asym
  auto* ba = app.add_subcommand("binom-asym", "Fit C(rho, j) ~ (-1)^j C j^{-rho-1} (1 + a_1/j + ...)");
  long long jmin = 1000, jmax = 10000;
  ba->add_option("--rho", rho_text)->required();
  ba->add_option("--jmin", jmin);
  ba->add_option("--jmax", jmax);
  ba->callback([&] {
    action = [&] {
      auto f = combinat::binom_asym_fit(parse(rho_text), jmin, jmax);
      json a = json::array();
      for (auto v : f.a_coeffs) a.push_back(cjson(v));
      emit_json(g,
                {{"rho", cjson(parse(rho_text))},
                 {"C", cjson(f.C)},
                 {"a", a},
                 {"exponent", cjson(f.exponent)},
                 {"residual", round12(f.residual)},
                 {"jmin", f.j_min},
                 {"jmax", f.j_max}},
                true);
      return 0;
    };
  });

  // formal dump
  auto* formal_cmd = app.add_subcommand("formal", "Formal tau-series engine");
  formal_cmd->require_subcommand(1);
  auto* dump = formal_cmd->add_subcommand("dump", "Print the expansion of a binomial as JSON");
  std::string subject = "alpha";
  long long fjmin = -2, fjmax = 6;
  dump->add_option("--subject", subject)->check(CLI::IsMember({"alpha", "z", "k"}));
  dump->add_option("--rho", rho_text)->required();
  dump->add_option("--jmin", fjmin);
  dump->add_option("--jmax", fjmax);
  dump->callback([&] {
    action = [&] {
      auto sub = subject == "alpha" ? formal::Subject::alpha : subject == "z" ? formal::Subject::z : formal::Subject::k;
      auto s = formal::expand_binomial(sub, parse(rho_text), fjmin, fjmax);
      std::string text = s.to_json();
      std::cout << text << "\n";
      if (!g.json_path.empty()) write_file(g.json_path, text);
      return 0;
    };
  });

  // cesaro psum
  auto* ces = app.add_subcommand("cesaro", "Cesaro limits");
  ces->require_subcommand(1);
  auto* cps = ces->add_subcommand("psum", "zeta(s) as the limit of q(P; s) applied to the p-sum remainder");
  z0_text = "0";
  cps->add_option("--s", s_text)->required();
  cps->add_option("--z0", z0_text);
  cps->callback([&] {
    action = [&] {
      cplx s = parse(s_text);
      auto v = zetafns::hurwitz_cesaro(parse(z0_text), s, g.x_max, g.step);
      auto op = summation::regular_poly(s, summation::Mode::theorem2);
      emit_json(g, {{"estimate", cjson(v.value)}, {"error_estimate", round12(v.error_estimate)}, {"operator", op.to_string()}},
                true);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
    if (tol_opt->count() > 0) g.tol = tol_value;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
