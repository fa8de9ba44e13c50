#include "cesaro/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <regex>

namespace cesaro::report {

using nlohmann::ordered_json;

bool SuiteReport::passed() const { return failures() == 0; }

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const Case& c) { return !c.pass; }));
}

void SuiteReport::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) { return a.name < b.name; });
}

namespace {

bool within(double err, double tol) { return std::isfinite(err) && err <= tol; }

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

ordered_json scalar_json(const Scalar& s) {
  if (const auto* z = std::get_if<cplx>(&s))
    return ordered_json{{"re", round_sig(z->real(), 12)}, {"im", round_sig(z->imag(), 12)}};
  return std::get<std::string>(s);
}

Scalar scalar_from(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  return cplx(j.at("re").get<double>(), j.at("im").get<double>());
}

ordered_json number_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round_sig(x, 12);
}

double number_from(const ordered_json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    return s == "inf" ? INFINITY : -INFINITY;
  }
  return j.get<double>();
}

ordered_json suite_json(const SuiteReport& r) {
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"name", c.name},
                     {"expected", scalar_json(c.expected)},
                     {"actual", scalar_json(c.actual)},
                     {"abs_err", number_json(c.abs_err)},
                     {"tol", number_json(c.tol)},
                     {"pass", c.pass}});
  }
  return {{"suite", r.suite}, {"cases", cases}, {"runtime_ms", r.runtime_ms}};
}

}  // namespace

Case complex_case(std::string name, cplx expected, cplx actual, double tol) {
  double err = std::abs(actual - expected);
  return {std::move(name), expected, actual, err, tol, within(err, tol)};
}

Case rational_case(std::string name, const scale::Rational& expected, const scale::Rational& actual) {
  scale::Rational d = actual - expected;
  if (d < 0) d = -d;
  double err = scale::to_double(d);
  return {std::move(name), scale::to_string(expected), scale::to_string(actual), err, 0.0, expected == actual};
}

Case bound_case(std::string name, double actual, double bound) {
  double err = std::abs(actual);
  return {std::move(name), cplx(0.0), cplx(actual), err, bound, within(err, bound)};
}

Case bool_case(std::string name, bool actual) {
  return {std::move(name), std::string("true"), std::string(actual ? "true" : "false"), actual ? 0.0 : 1.0, 0.0, actual};
}

std::string format_real(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string format_complex(cplx z, int digits) {
  if (z.imag() == 0) return format_real(z.real(), digits);
  std::string im = format_real(std::abs(z.imag()), digits);
  return format_real(z.real(), digits) + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

cplx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  static const std::string num = R"(((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))";
  static const std::regex real_only("^([+-]?" + num + ")$");
  static const std::regex imag_only("^([+-]?)" + num + "?[ij]$");
  static const std::regex both("^([+-]?" + num + ")([+-])" + num + "?[ij]$");
  std::smatch m;
  auto coef = [](const std::ssub_match& v) { return v.matched ? std::stod(v.str()) : 1.0; };
  if (std::regex_match(s, m, real_only)) return {std::stod(m[1].str()), 0.0};
  if (std::regex_match(s, m, imag_only)) return {0.0, (m[1].str() == "-" ? -1.0 : 1.0) * coef(m[2])};
  if (std::regex_match(s, m, both)) return {std::stod(m[1].str()), (m[3].str() == "-" ? -1.0 : 1.0) * coef(m[4])};
  throw Error(ErrorKind::domain, "parse_complex: cannot read \"" + text + "\"");
}

std::string to_json(const SuiteReport& r, int indent) { return suite_json(r).dump(indent); }

std::string to_json(const std::vector<SuiteReport>& rs, int indent) {
  ordered_json suites = ordered_json::array();
  bool pass = true;
  for (const auto& r : rs) {
    suites.push_back(suite_json(r));
    pass = pass && r.passed();
  }
  return ordered_json{{"suites", suites}, {"pass", pass}}.dump(indent);
}

std::vector<SuiteReport> from_json(const std::string& text) {
  auto j = ordered_json::parse(text);
  std::vector<SuiteReport> out;
  for (const auto& s : j.at("suites")) {
    SuiteReport r;
    r.suite = s.at("suite").get<std::string>();
    r.runtime_ms = s.at("runtime_ms").get<long long>();
    for (const auto& c : s.at("cases")) {
      r.cases.push_back({c.at("name").get<std::string>(), scalar_from(c.at("expected")), scalar_from(c.at("actual")),
                         number_from(c.at("abs_err")), number_from(c.at("tol")), c.at("pass").get<bool>()});
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cesaro::report
