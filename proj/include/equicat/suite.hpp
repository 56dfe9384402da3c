#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equicat/catalog.hpp"
#include "equicat/igspace.hpp"
#include "equicat/report.hpp"

namespace equicat {

/// Named verification suites runnable against a catalog. Suite names are
/// validated up front; an unknown name is an input error, not a failure.
extern const std::vector<std::string> kSuiteNames;

struct SuiteConfig {
  std::string catalog_path;
  std::vector<std::string> suites;  // empty list runs nothing
  uint64_t seed = 1;
  int instance_count = 50;
  std::vector<std::string> fixtures;  // functor/map/lax/spectrum files
};

/// Reads {catalog, suites, seed, instance_count, fixtures} with paths
/// resolved relative to the config file's directory.
SuiteConfig parse_suite_config(const std::string& path);

struct SuiteRun {
  Report report;
  std::string catalog_name;
  uint64_t seed = 1;
};

/// Runs the selected suites plus every listed fixture; the report is
/// sorted by check name, so assembly order never shows.
SuiteRun run_suites(const SuiteConfig& config);

/// The same battery against an in-memory catalog (used by the acceptance
/// tests and the benchmark).
Report run_suites_on(const SiteCatalog& cat, const std::vector<std::string>& suites,
                     uint64_t seed, int instance_count);

/// Unit map of the sphere into the suspension family at S^0; passes
/// check_global_map against those two families.
GlobalMap sphere_unit_map(const GlobalSpace& sphere, const GlobalSpace& susp2);

}  // namespace equicat
