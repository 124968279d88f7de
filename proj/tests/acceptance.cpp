// Runs the eighteen acceptance criteria and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <exception>

#include "klag/verify.hpp"

int main() {
  int failed = 0;
  for (int c = 1; c <= 18; ++c) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    double worst_ratio = 0.0;
    std::size_t count = 0;
    std::string detail;
    try {
      const auto cases = klag::run_criterion(c);
      count = cases.size();
      pass = !cases.empty();
      for (const auto& r : cases) {
        pass = pass && r.pass;
        const double ratio = r.tolerance > 0.0 ? r.residual / r.tolerance : r.residual;
        if (ratio >= worst_ratio) {
          worst_ratio = ratio;
          char buf[256];
          std::snprintf(buf, sizeof buf, "%s residual %.3e tol %.1e", r.name.c_str(), r.residual, r.tolerance);
          detail = buf;
        }
        if (!r.pass) std::printf("    failing case %s: residual %.3e > %.1e\n", r.name.c_str(), r.residual, r.tolerance);
        if (c == 14) std::printf("    %s: %s\n", r.name.c_str(), r.note.c_str());
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %-40s cases=%zu worst: %s (%.1fs)\n", pass ? "PASS" : "FAIL", c,
                klag::criterion_title(c).c_str(), count, detail.c_str(), secs);
    std::fflush(stdout);
    failed += !pass;
  }
  std::printf("%d of 18 criteria passed\n", 18 - failed);
  return failed == 0 ? 0 : 1;
}
