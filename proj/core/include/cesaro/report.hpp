#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cesaro/scale.hpp"

namespace cesaro::report {

// A complex number or an exact/literal string ("num/den", "true").
using Scalar = std::variant<cplx, std::string>;

struct Case {
  std::string name;
  Scalar expected;
  Scalar actual;
  double abs_err = 0;
  double tol = 0;
  bool pass = false;  // abs_err <= tol
};

struct SuiteReport {
  std::string suite;
  std::vector<Case> cases;
  long long runtime_ms = 0;

  bool passed() const;
  int failures() const;
  // Cases ordered by name; the JSON is then a function of the inputs except runtime_ms.
  void sort_cases();
};

Case complex_case(std::string name, cplx expected, cplx actual, double tol);
Case rational_case(std::string name, const scale::Rational& expected, const scale::Rational& actual);
// Passes when |actual| <= bound; recorded as expected 0.
Case bound_case(std::string name, double actual, double bound);
Case bool_case(std::string name, bool actual);

// Fixed 12 significant digits, "a+bi" / "a-bi"; a purely real value prints as "a".
std::string format_complex(cplx z, int digits = 12);
std::string format_real(double x, int digits = 12);
// Accepts "a", "bi", "a+bi", "a - b i", "i", "-i"; whitespace is ignored.
cplx parse_complex(const std::string& text);

// {"suite", "cases": [{name, expected, actual, abs_err, tol, pass}], "runtime_ms"};
// complex values are {"re", "im"} rounded to 12 significant digits.
std::string to_json(const SuiteReport& r, int indent = 2);
std::string to_json(const std::vector<SuiteReport>& rs, int indent = 2);
// Parses the output of to_json(vector) back.
std::vector<SuiteReport> from_json(const std::string& text);

}  // namespace cesaro::report
