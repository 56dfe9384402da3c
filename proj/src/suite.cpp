#include "equicat/suite.hpp"

#include <algorithm>
#include <filesystem>

#include "equicat/error.hpp"
#include "equicat/functor_checks.hpp"
#include "equicat/gspace_checks.hpp"
#include "equicat/instance_gen.hpp"
#include "equicat/json_io.hpp"
#include "equicat/site_checks.hpp"
#include "equicat/sphere.hpp"
#include "equicat/spectrum.hpp"

namespace equicat {

const std::vector<std::string> kSuiteNames = {
    "site-axioms", "fibration",  "top-fibration", "grothendieck",
    "functor",     "global",     "adjunction",    "triangles",
    "spectrum",    "sphere-fixed-points"};

SuiteConfig parse_suite_config(const std::string& path) {
  json doc = load_json_file(path);
  SuiteConfig config;
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (dir / fp).string();
  };
  if (!doc.contains("catalog"))
    throw Error(ErrorCode::BadInput, "suite config: missing 'catalog'");
  config.catalog_path = resolve(doc["catalog"].get<std::string>());
  for (const json& s : doc.value("suites", json::array())) {
    std::string name = s.get<std::string>();
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), name) ==
        kSuiteNames.end())
      throw Error(ErrorCode::BadInput, "suite config: unknown suite '" + name + "'");
    config.suites.push_back(std::move(name));
  }
  config.seed = doc.value("seed", 1ULL);
  config.instance_count = doc.value("instance_count", 50);
  for (const json& f : doc.value("fixtures", json::array()))
    config.fixtures.push_back(resolve(f.get<std::string>()));
  return config;
}

GlobalMap sphere_unit_map(const GlobalSpace& sphere, const GlobalSpace& susp2) {
  const SiteCatalog& cat = *sphere.cat;
  GlobalMap eta;
  eta.name = "sphere-unit";
  eta.comp.resize(cat.group_count());
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    PointedGSet x0 = trivial_gset(cat.groups[gi], pointed_set_of_size(2), "X0");
    eta.comp[gi].resize(cat.rep_count(gi));
    for (int ri = 0; ri < cat.rep_count(gi); ++ri) {
      const PointedGSet& sv = sphere.components[gi].objects[ri];
      auto& tbl = eta.comp[gi][ri];
      tbl.resize(sv.size());
      tbl[sv.basepoint] = static_cast<int16_t>(
          susp2.components[gi].objects[ri].basepoint);
      for (int x = 0; x < sv.size(); ++x) {
        if (x == sv.basepoint) continue;
        tbl[x] = static_cast<int16_t>(smash_pair_index(x0, sv, 1, x));
      }
    }
  }
  return eta;
}

namespace {

bool selected(const std::vector<std::string>& suites, const std::string& name) {
  return std::find(suites.begin(), suites.end(), name) != suites.end();
}

Report run_fixture(const json& doc, const SiteCatalog& cat) {
  const std::string type = doc.value("type", "");
  if (type == "igspace") {
    IGSpace a = parse_igspace(doc, cat);
    return check_igspace(a);
  }
  if (type == "global") {
    GlobalSpace a = parse_global(doc, cat);
    return check_global(a);
  }
  if (type == "global-map") {
    LoadedGlobalMap lm = parse_global_map(doc, cat);
    return check_global_map(lm.map, *lm.source, *lm.target);
  }
  if (type == "lax") {
    LoadedLax ll = parse_lax(doc, cat);
    Report report;
    std::optional<Spectrum> derived = spectrum_from_lax(ll.lax, report);
    if (derived.has_value()) report.merge(check_spectrum(*derived));
    return report;
  }
  if (type == "spectrum") {
    LoadedSpectrum ls = parse_spectrum(doc, cat);
    return check_spectrum(ls.spec);
  }
  if (type == "ispace") {
    ISpace x = parse_ispace(doc);
    return check_adjunction_ispace(x, cat, x.name);
  }
  throw Error(ErrorCode::BadInput,
              "fixture: unknown or missing type '" + type + "'");
}

}  // namespace

Report run_suites_on(const SiteCatalog& cat, const std::vector<std::string>& suites,
                     uint64_t seed, int instance_count) {
  Report report;

  if (selected(suites, "site-axioms")) report.merge(check_site_axioms(cat));
  if (selected(suites, "fibration"))
    report.merge(check_restriction_object(cat));
  if (selected(suites, "grothendieck")) report.merge(check_grothendieck(cat));
  if (selected(suites, "top-fibration")) {
    report.merge(check_top_fibration(cat));
    report.merge(check_gspace_laws(cat));
  }

  const bool need_globals = selected(suites, "functor") ||
                            selected(suites, "global") ||
                            selected(suites, "adjunction") ||
                            selected(suites, "triangles") ||
                            selected(suites, "spectrum");
  GlobalSpace sphere, susp2, susp3, susp4, susp5, const1;
  if (need_globals) {
    sphere = sphere_global(cat);
    susp2 = suspension_global(cat, pointed_set_of_size(2));
    susp3 = suspension_global(cat, pointed_set_of_size(3));
    susp4 = suspension_global(cat, pointed_set_of_size(4));
    susp5 = suspension_global(cat, pointed_set_of_size(5));
    const1 = constant_global(cat, pointed_set_of_size(1));
  }

  if (selected(suites, "functor")) {
    for (int gi = 0; gi < cat.group_count(); ++gi)
      report.merge(check_igspace(sphere.components[gi]));
  }

  if (selected(suites, "global")) {
    report.merge(check_global(sphere));
    report.merge(check_global(susp3));
    report.merge(check_global(susp4));
    report.merge(check_global(susp5));
    report.merge(check_global(const1));
    GlobalMap eta = sphere_unit_map(sphere, susp2);
    report.merge(check_global_map(eta, sphere, susp2));
  }

  if (selected(suites, "adjunction")) {
    report.merge(check_adjunction(sphere, "sphere"));
    report.merge(check_adjunction(const1, "const1"));
    report.merge(check_adjunction(susp3, "susp3"));
    report.merge(check_adjunction(susp4, "susp4"));
    report.merge(check_adjunction(susp5, "susp5"));
    for (int i = 0; i < instance_count; ++i) {
      ISpace x = random_ispace(seed, i, cat.dim_cap);
      report.merge(check_adjunction_ispace(x, cat, x.name));
    }
  }

  if (selected(suites, "triangles")) {
    report.merge(check_triangles(sphere, "sphere"));
    report.merge(check_triangles(const1, "const1"));
    report.merge(check_triangles(susp3, "susp3"));
    report.merge(check_triangles(susp4, "susp4"));
    report.merge(check_triangles(susp5, "susp5"));
    for (int i = 0; i < instance_count; ++i) {
      ISpace x = random_ispace(seed, i, cat.dim_cap);
      report.merge(check_triangles_ispace(x, cat, "rand" + std::to_string(i)));
    }
  }

  if (selected(suites, "spectrum")) {
    GlobalSpectrum gs = sphere_global_spectrum(sphere);
    report.merge(check_global_spectrum(gs));
    report.merge(check_sphere_restriction(cat));
    for (int gi = 0; gi < cat.group_count(); ++gi) {
      LaxMonoidal lax = sphere_lax(sphere.components[gi]);
      Report lax_report;
      std::optional<Spectrum> derived = spectrum_from_lax(lax, lax_report);
      report.merge(lax_report);
      const std::string name = "spectrum/sphere-derived-sigma@" +
                               cat.groups[gi]->name;
      if (!derived.has_value()) {
        report.add(name, false, "lax coherence failed; no derived action");
      } else {
        bool same = derived->sigma == gs.per_group[gi].sigma;
        report.add(name, same,
                   same ? "" : "derived action differs from the direct one");
      }
      // suspension spectrum of the two-point set
      Spectrum ss = suspension_spectrum(susp2.components[gi],
                                        pointed_set_of_size(2));
      report.merge(check_spectrum(ss));
    }
  }

  if (selected(suites, "sphere-fixed-points"))
    report.merge(check_sphere_fixed_points(cat));

  report.sort_by_name();
  return report;
}

SuiteRun run_suites(const SuiteConfig& config) {
  SiteCatalog cat = parse_catalog(load_json_file(config.catalog_path));
  SuiteRun run;
  run.seed = config.seed;
  run.catalog_name = cat.name;
  run.report = run_suites_on(cat, config.suites, config.seed,
                             config.instance_count);
  for (const std::string& path : config.fixtures) {
    Report fr = run_fixture(load_json_file(path), cat);
    run.report.merge(fr);
  }
  run.report.sort_by_name();
  return run;
}

}  // namespace equicat
