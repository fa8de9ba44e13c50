#include <cmath>
#include <regex>

#include "cesaro/report.hpp"
#include "cesaro/suites.hpp"
#include "helpers.hpp"

using namespace cesaro;
using testing::cplx;

namespace {

std::string without_runtime(std::string json) {
  static const std::regex runtime("\"runtime_ms\": [0-9]+");
  return std::regex_replace(json, runtime, "\"runtime_ms\": 0");
}

}  // namespace

TEST_CASE("complex formatting uses 12 significant digits") {
  CHECK(report::format_complex(-1.0 / 12) == "-0.0833333333333");
  CHECK(report::format_complex({0.3, -0.7}) == "0.3-0.7i");
  CHECK(report::format_complex({0.0, 2.0}) == "0+2i");
  CHECK(report::format_real(1e-20) == "1e-20");
}

TEST_CASE("complex parsing accepts the documented forms") {
  CHECK(report::parse_complex("-1") == cplx(-1.0));
  CHECK(report::parse_complex("0.3+0.7i") == cplx(0.3, 0.7));
  CHECK(report::parse_complex(" 0.3 - 0.7 i ") == cplx(0.3, -0.7));
  CHECK(report::parse_complex("2i") == cplx(0.0, 2.0));
  CHECK(report::parse_complex("-i") == cplx(0.0, -1.0));
  CHECK(report::parse_complex("1e-3+2e2j") == cplx(1e-3, 200.0));
  CHECK(report::parse_complex(".5") == cplx(0.5));
  for (const char* bad : {"", "abc", "1+", "1++2i", "i2"}) CHECK_THROWS_AS(report::parse_complex(bad), cesaro::Error);
}

TEST_CASE("format and parse round trip") {
  for (cplx z : {cplx(0.25, -3.5), cplx(-7.0), cplx(1.5e-7, 2.25e3)})
    CHECK(report::parse_complex(report::format_complex(z)) == z);
}

TEST_CASE("case constructors derive pass from abs_err and tol") {
  auto a = report::complex_case("a", 1.0, 1.0 + 1e-9, 1e-8);
  CHECK(a.pass);
  CHECK(a.abs_err == doctest::Approx(1e-9));
  CHECK_FALSE(report::complex_case("b", 1.0, 1.1, 1e-8).pass);
  CHECK_FALSE(report::complex_case("c", 1.0, cplx(NAN, 0), 1.0).pass);
  auto r = report::rational_case("d", scale::Rational(1, 3), scale::Rational(1, 3));
  CHECK(r.pass);
  CHECK(std::get<std::string>(r.expected) == "1/3");
  CHECK_FALSE(report::rational_case("e", scale::Rational(1, 3), scale::Rational(1, 4)).pass);
  CHECK(report::bound_case("f", -0.5, 0.5).pass);
  CHECK_FALSE(report::bool_case("g", false).pass);
}

TEST_CASE("reports round trip through JSON") {
  report::SuiteReport r;
  r.suite = "scale";
  r.runtime_ms = 12;
  r.cases.push_back(report::complex_case("z", {0.1, 0.2}, {0.1, 0.2}, 1e-12));
  r.cases.push_back(report::rational_case("q", scale::Rational(-1, 12), scale::Rational(-1, 12)));
  r.cases.push_back({"inf", cplx(0.0), cplx(0.0), INFINITY, 1.0, false});
  auto text = report::to_json(std::vector<report::SuiteReport>{r});
  auto back = report::from_json(text);
  REQUIRE(back.size() == 1);
  CHECK(back[0].suite == "scale");
  CHECK(back[0].runtime_ms == 12);
  REQUIRE(back[0].cases.size() == 3);
  CHECK(std::get<cplx>(back[0].cases[0].actual) == cplx(0.1, 0.2));
  CHECK(std::get<std::string>(back[0].cases[1].expected) == "-1/12");
  CHECK(std::isinf(back[0].cases[2].abs_err));
  CHECK(report::to_json(back) == text);
  CHECK(text.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("sorting orders cases by name") {
  report::SuiteReport r;
  r.cases.push_back(report::bool_case("b", true));
  r.cases.push_back(report::bool_case("a", true));
  r.sort_cases();
  CHECK(r.cases[0].name == "a");
}

TEST_CASE("suite runs are deterministic apart from runtime") {
  for (const char* part : {"scale", "combinat", "fourier.singular"}) {
    auto a = report::to_json(suites::run_part(part));
    auto b = report::to_json(suites::run_part(part));
    CAPTURE(part);
    CHECK(without_runtime(a) == without_runtime(b));
  }
}

TEST_CASE("suite names and tolerance override") {
  CHECK(suites::part_names().size() == 8);
  CHECK(suites::suite_names().size() == 6);
  CHECK_THROWS_AS(suites::run_part("nonsense"), cesaro::Error);
  suites::SuiteOptions strict;
  strict.tol = 1e-300;
  auto r = suites::run_part("combinat", strict);
  CHECK_FALSE(r.passed());
  // exact cases are unaffected by the override
  for (const auto& c : r.cases)
    if (c.name.find("triangle") != std::string::npos) CHECK(c.pass);
  CHECK(suites::run("all").size() == 6);
}
