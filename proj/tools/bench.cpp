// Compares the serial reference kernels against the OpenMP ones on the
// heavy sweeps and checks that both produce identical reports.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "equicat/catalog.hpp"
#include "equicat/functor_checks.hpp"
#include "equicat/kan.hpp"
#include "equicat/parallel.hpp"
#include "equicat/site_checks.hpp"
#include "equicat/sphere.hpp"
#include "equicat/suite.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Case {
  std::string name;
  std::function<equicat::Report()> run;
};

}  // namespace

int main() {
  using namespace equicat;
  std::printf("building the standard catalog...\n");
  SiteCatalog cat = standard_catalog();
  int total_reps = 0;
  for (int gi = 0; gi < cat.group_count(); ++gi) total_reps += cat.rep_count(gi);
  std::printf("catalog: %d groups, %zu homs, %d reps, dim cap %d\n",
              cat.group_count(), cat.homs.size(), total_reps, cat.dim_cap);
  std::printf("threads available: %d\n\n", par::max_threads());

  GlobalSpace sphere = sphere_global(cat);
  int big = 0;
  for (int gi = 0; gi < cat.group_count(); ++gi)
    if (cat.rep_count(gi) > cat.rep_count(big)) big = gi;

  std::vector<Case> cases = {
      {"site-axioms", [&] { return check_site_axioms(cat); }},
      {"restriction-object", [&] { return check_restriction_object(cat); }},
      {"igspace(sphere@" + cat.groups[big]->name + ")",
       [&] { return check_igspace(sphere.components[big]); }},
      {"adjunction(sphere)", [&] { return check_adjunction(sphere, "sphere"); }},
  };

  std::printf("%-32s %12s %12s %8s\n", "kernel", "serial ms", "openmp ms",
              "speedup");
  for (const Case& c : cases) {
    Report serial_report, parallel_report;
    par::set_parallel(false);
    double serial_ms = run_ms([&] { serial_report = c.run(); });
    par::set_parallel(true);
    double parallel_ms = run_ms([&] { parallel_report = c.run(); });
    bool same = serial_report.checks.size() == parallel_report.checks.size();
    for (size_t i = 0; same && i < serial_report.checks.size(); ++i)
      same = serial_report.checks[i].name == parallel_report.checks[i].name &&
             serial_report.checks[i].pass == parallel_report.checks[i].pass &&
             serial_report.checks[i].witness == parallel_report.checks[i].witness;
    std::printf("%-32s %12.1f %12.1f %7.2fx %s\n", c.name.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms,
                same ? "" : "RESULTS DIFFER");
    if (!same) return 1;
  }
  par::set_parallel(true);
  return 0;
}
