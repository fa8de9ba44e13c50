#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cesaro/report.hpp"

namespace cesaro::suites {

struct SuiteOptions {
  std::optional<double> tol;  // replaces every non-exact default tolerance
  double x_max = 2000;        // Cesaro limits
  double step = 1.0 / 128;
};

// Parts, one per acceptance criterion:
//   scale, formal, cesaro.operators, cesaro.limits, zetafns,
//   fourier.coefficients, combinat, fourier.singular
const std::vector<std::string>& part_names();
report::SuiteReport run_part(const std::string& part, const SuiteOptions& opt = {});

// CLI suites: scale, formal, cesaro, zetafns, fourier, combinat; "cesaro" and
// "fourier" merge their parts.
const std::vector<std::string>& suite_names();
report::SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt = {});
// "all" expands to every suite.
std::vector<report::SuiteReport> run(const std::string& suite, const SuiteOptions& opt = {});

}  // namespace cesaro::suites
