#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "equicat/catalog.hpp"
#include "equicat/igspace.hpp"
#include "equicat/kan.hpp"
#include "equicat/report.hpp"
#include "equicat/spectrum.hpp"

namespace equicat {

using json = nlohmann::json;

/// Parse failures and schema violations throw Error(BadInput) whose message
/// carries a JSON-pointer-style path; the CLI maps them to exit code 2.
json load_json_file(const std::string& path);

SiteCatalog parse_catalog(const json& doc);
json catalog_to_json(const SiteCatalog& cat);

ISpace parse_ispace(const json& doc);
json ispace_to_json(const ISpace& x);

/// Functor bundles are resolved against a catalog; object maps are keyed by
/// rep label and morphism maps by hom-element index.
IGSpace parse_igspace(const json& doc, const SiteCatalog& cat);
json igspace_to_json(const IGSpace& a);

GlobalSpace parse_global(const json& doc, const SiteCatalog& cat);

/// Built-in functor families addressable from fixture files: "sphere",
/// "unit", "constN", "suspN".
std::shared_ptr<GlobalSpace> builtin_global(const std::string& name,
                                            const SiteCatalog& cat);

struct LoadedGlobalMap {
  std::shared_ptr<GlobalSpace> source, target;
  GlobalMap map;
};
LoadedGlobalMap parse_global_map(const json& doc, const SiteCatalog& cat);

struct LoadedLax {
  std::shared_ptr<IGSpace> base;
  LaxMonoidal lax;
};
LoadedLax parse_lax(const json& doc, const SiteCatalog& cat);

struct LoadedSpectrum {
  std::shared_ptr<IGSpace> base;
  Spectrum spec;
};
LoadedSpectrum parse_spectrum(const json& doc, const SiteCatalog& cat);

/// Kan extension output: canonical class representatives and action tables,
/// deterministic for golden-file comparison.
json extension_to_json(const GlobalExtension& ex, int gi, const ISpace& source);

json report_to_json(const Report& report, const std::string& catalog_name,
                    uint64_t seed);
std::string report_to_text(const Report& report,
                           const std::string& catalog_name, uint64_t seed,
                           bool with_timing);

}  // namespace equicat
