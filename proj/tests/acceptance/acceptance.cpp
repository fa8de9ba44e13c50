// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cesaro/suites.hpp"

namespace {

struct Criterion {
  int id;
  const char* part;
  const char* title;
  double limit_s;
};

const std::vector<Criterion> kCriteria = {
    {1, "scale", "exact scale identities", 1},
    {2, "formal", "formal tau engine", 10},
    {3, "cesaro.operators", "operator algebra", 60},
    {4, "cesaro.limits", "Cesaro limits of p-sums and power terms", 300},
    {5, "zetafns", "zeta routes", 120},
    {6, "fourier.coefficients", "Fourier coefficients", 60},
    {7, "combinat", "combinatorics", 30},
    {8, "fourier.singular", "singular-limit diagnostics", 5},
};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failed = 0;
  for (const auto& c : kCriteria) {
    auto t0 = clock::now();
    auto r = cesaro::suites::run_part(c.part);
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    bool fast = secs < c.limit_s;
    bool ok = r.passed() && fast && !r.cases.empty();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%zu/%zu cases, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                r.cases.size() - static_cast<size_t>(r.failures()), r.cases.size(), secs, c.limit_s);
    for (const auto& k : r.cases)
      if (!k.pass)
        std::printf("    failed case %s: abs_err=%.3g tol=%.3g\n", k.name.c_str(), k.abs_err, k.tol);
    if (!fast) std::printf("    runtime over the limit\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  return failed == 0 ? 0 : 1;
}
