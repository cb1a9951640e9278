// Acceptance suite: every release gate in one binary, one line per
// criterion. With no arguments runs all criteria; with a number runs
// just that criterion. Exits nonzero when any executed gate fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "fdsum/report.hpp"
#include "fdsum/verify.hpp"

namespace {

using fdsum::VerificationReport;

int failures_total = 0;
int selected = 0;  // 0 = all

void run(int number, const std::string& label, double max_seconds,
         VerificationReport (*make)()) {
  if (selected != 0 && selected != number) return;
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  bool threw = false;
  std::string what;
  try {
    report = make();
  } catch (const std::exception& err) {
    threw = true;
    what = err.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool time_ok = max_seconds <= 0 || seconds <= max_seconds;
  const bool ok = !threw && report.passed && time_ok;
  if (!ok) ++failures_total;
  std::printf("criterion %2d [%s] %-36s (%.2fs)\n", number, ok ? "PASS" : "FAIL",
              label.c_str(), seconds);
  if (threw) {
    std::printf("             exception: %s\n", what.c_str());
  } else if (!report.passed) {
    std::printf("             %zu failure(s); first witnesses:\n",
                report.failure_count);
    const std::size_t shown = std::min<std::size_t>(report.failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& w = report.failures[i];
      std::printf("             %s: %s vs %s\n", w.params.c_str(), w.lhs.c_str(),
                  w.rhs.c_str());
    }
  } else if (!time_ok) {
    std::printf("             exceeded time budget of %.2fs\n", max_seconds);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) selected = std::atoi(argv[1]);
  namespace v = fdsum::verify;
  if (selected == 0) {
    std::printf("acceptance suite (%d worker threads)\n", v::sweep_threads());
  }

  run(1, "worked 4-periodic example, 5 methods", 1.0,
      [] { return v::s134_example(); });
  run(2, "five-way agreement b<=30 d<=3", 0.0,
      [] { return v::five_way_agreement(30, 3); });
  run(3, "determinant law b<=12 d<=3", 0.0,
      [] { return v::determinant_law(12, 3, 200, 20); });
  run(4, "extended reciprocity parts<=10 dims=3", 0.0,
      [] { return v::rademacher_extended_grid(10, 3); });
  run(5, "averages b in [3,30] d<=2", 0.0,
      [] { return v::average_theorem(30, 2); });
  run(6, "bounds + attainment b<=50, Dedekind b<=30", 0.0, [] {
    VerificationReport report = v::bounds_2d_grid(50);
    report.merge(v::dedekind_corollary_grid(30));
    return report;
  });
  run(7, "extrema containment a<b<=60 + b=15 facts", 0.0,
      [] { return v::extrema_grid(60); });
  run(8, "R shift bound a,b<=25 + quadratic cases", 0.0, [] {
    VerificationReport report = v::r_shift_grid(25);
    report.merge(v::bounds_recip_cases());
    return report;
  });
  run(9, "lattice formula vs brute e,f<=8", 0.0,
      [] { return v::lattice_grid(8, 4); });
  run(10, "constancy criteria p in {3,5,7}", 0.0,
      [] { return v::constancy_grid({3, 5, 7}, 5000); });
  run(11, "group laws + characterization b<=12", 0.0, [] {
    VerificationReport report = v::group_laws(12);
    report.merge(v::convolution_characterization_random(12, 4));
    return report;
  });

  if (selected == 0) {
    if (failures_total == 0) {
      std::printf("all criteria passed\n");
    } else {
      std::printf("%d criterion(s) failed\n", failures_total);
    }
  }
  return failures_total == 0 ? 0 : 1;
}
