#include <doctest.h>

#include "equicat/catalog.hpp"
#include "equicat/error.hpp"
#include "equicat/functor_checks.hpp"
#include "equicat/instance_gen.hpp"
#include "equicat/kan.hpp"
#include "equicat/sphere.hpp"
#include "equicat/suite.hpp"

using namespace equicat;

namespace {

SiteCatalog mini_catalog() {
  CatalogSpec spec;
  spec.name = "mini";
  spec.dim_cap = 2;
  GroupPtr e = trivial_group();
  GroupPtr c2 = cyclic_group(2, "C2");
  spec.groups = {e, c2};
  SignedPerm neg(1);
  neg.signs[0] = -1;
  spec.seed_reps = {make_rep(c2, 1, {sp_identity(1), neg}, "sign")};
  return build_catalog(spec);
}

}  // namespace

TEST_CASE("constant and sphere functors satisfy the functor laws") {
  SiteCatalog cat = mini_catalog();
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    CHECK(check_igspace(constant_igspace(cat, gi, pointed_set_of_size(1))).all_pass());
    CHECK(check_igspace(sphere_igspace(cat, gi)).all_pass());
    CHECK(check_igspace(suspension_igspace(cat, gi, pointed_set_of_size(3))).all_pass());
    CHECK(check_igspace(unit_igspace(cat, gi)).all_pass());
  }
}

namespace {

// Naive reference for the composition law: every same-dimension triple,
// no content deduplication. Returns the first failing witness in triple
// enumeration order.
std::optional<std::string> naive_composition_failure(const IGSpace& a) {
  const SiteCatalog& cat = *a.cat;
  const int n = cat.rep_count(a.gi);
  for (int vi = 0; vi < n; ++vi)
    for (int wi = 0; wi < n; ++wi) {
      if (a.pair_id(vi, wi) < 0) continue;
      for (int ui = 0; ui < n; ++ui) {
        if (a.pair_id(wi, ui) < 0) continue;
        const HyperocTables& t = hyperoc_tables(cat.rep(a.gi, vi).dim);
        for (int f = 0; f < t.order; ++f)
          for (int g = 0; g < t.order; ++g)
            for (int x = 0; x < a.objects[vi].size(); ++x)
              if (a.map_apply(vi, ui, t.compose(f, g), x) !=
                  a.map_apply(wi, ui, f, a.map_apply(vi, wi, g, x)))
                return "(" + cat.rep(a.gi, vi).label + "," +
                       cat.rep(a.gi, wi).label + "," + cat.rep(a.gi, ui).label +
                       ")";
      }
    }
  return std::nullopt;
}

bool composition_entry_pass(const Report& r) {
  for (const CheckResult& c : r.checks)
    if (c.name.find("/composition") != std::string::npos) return c.pass;
  return false;
}

}  // namespace

TEST_CASE("composition dedup agrees with the naive full triple sweep") {
  SiteCatalog cat = mini_catalog();
  int gi = cat.group_index("C2");

  IGSpace good = sphere_igspace(cat, gi);
  CHECK(!naive_composition_failure(good).has_value());
  CHECK(composition_entry_pass(check_igspace(good)));

  // corrupt morphism tables in several distinct spots; both checkers must
  // agree on pass/fail every time
  for (int spot = 0; spot < 6; ++spot) {
    IGSpace bad = sphere_igspace(cat, gi);
    int p = spot % static_cast<int>(bad.morph.size());
    if (bad.morph[p].size() < 3) p = (p + 1) % static_cast<int>(bad.morph.size());
    bad.morph[p][bad.morph[p].size() - 1] = static_cast<int16_t>(
        bad.morph[p][bad.morph[p].size() - 1] == 0 ? 1 : 0);
    bool naive_fails = naive_composition_failure(bad).has_value();
    bool dedup_fails = !composition_entry_pass(check_igspace(bad));
    CHECK(naive_fails == dedup_fails);
  }
}

TEST_CASE("a corrupted morphism image fails with the specific witness") {
  SiteCatalog cat = mini_catalog();
  int gi = cat.group_index("C2");
  IGSpace sphere = sphere_igspace(cat, gi);
  // swap two images at one hom element of a dim-1 pair
  int sign_idx = cat.rep_index_by_label(gi, "sign");
  int p = sphere.pair_id(sign_idx, sign_idx);
  std::swap(sphere.morph[p][1 * 3 + 1], sphere.morph[p][1 * 3 + 2]);
  Report r = check_igspace(sphere);
  CHECK(!r.all_pass());
  bool witnessed = false;
  for (const CheckResult& c : r.checks)
    if (!c.pass) witnessed = witnessed || !c.witness.empty();
  CHECK(witnessed);
}

TEST_CASE("global sphere and suspensions pass global coherence") {
  SiteCatalog cat = mini_catalog();
  CHECK(check_global(sphere_global(cat)).all_pass());
  CHECK(check_global(suspension_global(cat, pointed_set_of_size(3))).all_pass());
  CHECK(check_global(constant_global(cat, pointed_set_of_size(2))).all_pass());
}

TEST_CASE("identity-hom-only catalogs reduce the cocycle to the unit law") {
  CatalogSpec spec;
  spec.name = "idonly";
  spec.dim_cap = 1;
  GroupPtr e = trivial_group();
  GroupPtr c2 = cyclic_group(2, "C2");
  spec.groups = {e, c2};
  spec.homs = std::vector<GroupHom>{identity_hom(e), identity_hom(c2)};
  SiteCatalog cat = build_catalog(spec);
  GlobalSpace sphere = sphere_global(cat);
  Report r = check_global(sphere);
  CHECK(r.all_pass());
}

TEST_CASE("a non-equivariant phi component fails the equivariance check") {
  SiteCatalog cat = mini_catalog();
  GlobalSpace sphere = sphere_global(cat);
  // at the dim-2 rep sign(+)triv1 the generator flips the first sign
  // coordinate, so swapping the images of ++ and +- is a based bijection
  // that is genuinely not equivariant
  int k = -1;
  for (int i = 0; i < static_cast<int>(cat.homs.size()); ++i)
    if (cat.homs[i].source->name == "C2" && cat.homs[i].is_identity_hom())
      k = i;
  REQUIRE(k >= 0);
  int tg = cat.group_index("C2");
  int vi = cat.rep_index_by_label(tg, "sign+triv1");
  REQUIRE(vi >= 0);
  std::swap(sphere.phi[k][vi][1], sphere.phi[k][vi][2]);
  Report r = check_global(sphere);
  CHECK(!r.all_pass());
  bool equivariance_failed = false;
  for (const CheckResult& c : r.checks)
    if (!c.pass && c.name.find("phi-equivariant") != std::string::npos)
      equivariance_failed = true;
  CHECK(equivariance_failed);
}

TEST_CASE("global maps: identity passes, corrupted component is caught") {
  SiteCatalog cat = mini_catalog();
  GlobalSpace sphere = sphere_global(cat);
  GlobalMap id = identity_global_map(sphere);
  CHECK(check_global_map(id, sphere, sphere).all_pass());

  GlobalSpace susp2 = suspension_global(cat, pointed_set_of_size(2));
  GlobalMap eta = sphere_unit_map(sphere, susp2);
  CHECK(check_global_map(eta, sphere, susp2).all_pass());

  // break equivariance in one fiber
  int gi = cat.group_index("C2");
  int sign_idx = cat.rep_index_by_label(gi, "sign");
  GlobalMap bad = eta;
  std::swap(bad.comp[gi][sign_idx][1], bad.comp[gi][sign_idx][2]);
  Report r = check_global_map(bad, sphere, susp2);
  CHECK(!r.all_pass());
  for (const CheckResult& c : r.checks)
    if (!c.pass) CHECK(!c.witness.empty());
}

TEST_CASE("global maps compose (randomized suspension maps)") {
  SiteCatalog cat = mini_catalog();
  GlobalSpace s3g = suspension_global(cat, pointed_set_of_size(3));
  GlobalSpace s4g = suspension_global(cat, pointed_set_of_size(4));
  GlobalSpace s2g = suspension_global(cat, pointed_set_of_size(2));

  // a based map X0 -> Y0 induces a suspension map by smashing with spheres
  auto induced = [&](const GlobalSpace& a, const GlobalSpace& b,
                     const std::vector<int>& point_map) {
    GlobalMap f;
    f.name = "induced";
    f.comp.resize(cat.group_count());
    for (int gi = 0; gi < cat.group_count(); ++gi) {
      f.comp[gi].resize(cat.rep_count(gi));
      for (int ri = 0; ri < cat.rep_count(gi); ++ri) {
        const PointedGSet& src = a.components[gi].objects[ri];
        const PointedGSet& dst = b.components[gi].objects[ri];
        PointedGSet x0a = trivial_gset(
            cat.groups[gi],
            pointed_set_of_size(static_cast<int>(point_map.size())), "a");
        const PointedGSet sph = sphere_gset(cat.rep(gi, ri));
        PointedGSet x0b = trivial_gset(
            cat.groups[gi], pointed_set_of_size(dst.size() > 1 ? (dst.size() - 1) / (sph.size() - 1) + 1 : 1), "b");
        auto& tbl = f.comp[gi][ri];
        tbl.resize(src.size());
        for (int x = 0; x < src.size(); ++x) {
          auto [x0, sig] = smash_pair_of_index(x0a, sph, x);
          tbl[x] = static_cast<int16_t>(
              smash_pair_index(x0b, sph, point_map[x0], sig));
        }
      }
    }
    return f;
  };

  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    // random based maps 3 -> 4 -> 2 points
    std::vector<int> m34 = {0, 1 + rng.below(3), 1 + rng.below(3)};
    std::vector<int> m42 = {0, rng.below(2), rng.below(2), rng.below(2)};
    GlobalMap f = induced(s3g, s4g, m34);
    GlobalMap g = induced(s4g, s2g, m42);
    REQUIRE(check_global_map(f, s3g, s4g).all_pass());
    REQUIRE(check_global_map(g, s4g, s2g).all_pass());
    GlobalMap gf = compose_global_maps(g, f);
    CHECK(check_global_map(gf, s3g, s2g).all_pass());
  }
}

TEST_CASE("trivial-rep values of lawful global families carry no action") {
  SiteCatalog cat = standard_catalog();
  GlobalSpace susp = suspension_global(cat, pointed_set_of_size(4));
  for (int gi = 0; gi < cat.group_count(); ++gi)
    for (int d = 0; d <= cat.dim_cap; ++d)
      CHECK(susp.components[gi]
                .objects[cat.trivial_rep_index(gi, d)]
                .has_trivial_action());
}
