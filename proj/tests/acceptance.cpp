// Runs every acceptance criterion through the verification suites with their
// default sweeps and prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qbarnes/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "generating-function coefficients equal the closed form", {"theorem1-gf"}, 30},
      {2, "addition formula", {"addition"}, 10},
      {3, "distribution relation", {"distribution"}, 60},
      {4, "r-fold Riemann sums converge to the closed form", {"riemann-convergence"}, 180},
      {5, "measure additivity and boundedness", {"measure-additivity", "measure-bound"}, 60},
      {6, "cell sums of the measure converge to the integral", {"prop5"}, 60},
      {7, "q -> 1 limit equals the classical coefficient at 1/u", {"qlimit"}, 30},
      {8, "closed form equals Carlitz's numbers at 1/u", {"carlitz-bridge"}, 5},
      {9, "twisted Riemann sums and L-function interpolation", {"eq8-bridge", "interpolation"}, 180},
      {10, "Kummer congruences", {"kummer"}, 120},
      {11, "unit-power congruence", {"unit-power"}, 30},
  };
  const qbarnes::VerifyConfig cfg;
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t checks = 0, failed = 0;
    std::string error;
    try {
      for (const auto& suite : c.suites) {
        const auto report = qbarnes::run_suite(suite, cfg);
        checks += report.checks.size();
        for (const auto& check : report.checks) {
          if (check.pass) continue;
          if (++failed <= 3) {
            std::string params;
            for (const auto& [k, v] : check.params) params += " " + k + "=" + v;
            std::fprintf(stderr, "  criterion %d failing check %s:%s -> %s\n", c.id, check.name.c_str(),
                         params.c_str(), (check.residual ? *check.residual : *check.error_valuation).c_str());
          }
        }
      }
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = error.empty() && failed == 0 && checks > 0 && in_time;
    failures += !pass;
    std::printf("[%s] criterion %2d: %s: %zu checks, %zu failed, %.2f s (limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL",
                c.id, c.title, checks, failed, seconds, c.limit_seconds, in_time ? "" : ", over time",
                error.empty() ? "" : (", error: " + error).c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
