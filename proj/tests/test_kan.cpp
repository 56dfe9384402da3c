#include <doctest.h>

#include "equicat/catalog.hpp"
#include "equicat/error.hpp"
#include "equicat/functor_checks.hpp"
#include "equicat/instance_gen.hpp"
#include "equicat/kan.hpp"
#include "equicat/sphere.hpp"

using namespace equicat;

namespace {

SiteCatalog mini_catalog(int cap = 2) {
  CatalogSpec spec;
  spec.name = "mini";
  spec.dim_cap = cap;
  GroupPtr e = trivial_group();
  GroupPtr c2 = cyclic_group(2, "C2");
  spec.groups = {e, c2};
  SignedPerm neg(1);
  neg.signs[0] = -1;
  spec.seed_reps = {make_rep(c2, 1, {sp_identity(1), neg}, "sign")};
  return build_catalog(spec);
}

}  // namespace

TEST_CASE("restricting the sphere gives the sign-vector sphere over e") {
  SiteCatalog cat = mini_catalog();
  ISpace x = restrict_R(sphere_global(cat));
  for (int d = 0; d <= cat.dim_cap; ++d) {
    CHECK(x.value_size(d) == 1 + (1 << d));
    // morphisms act as the signed permutations on sign vectors
    const auto& perms = all_signed_perms(d);
    for (size_t f = 0; f < perms.size(); ++f)
      for (int m = 1; m < x.value_size(d); ++m)
        CHECK(x.map_apply(d, static_cast<int>(f), m) ==
              sphere_index(sp_apply(perms[f], sphere_vector(d, m))));
  }
  validate_ispace(x);
}

TEST_CASE("restricting a constant functor gives a constant functor") {
  SiteCatalog cat = mini_catalog();
  ISpace x = restrict_R(constant_global(cat, pointed_set_of_size(3)));
  for (int d = 0; d <= cat.dim_cap; ++d) {
    CHECK(x.value_size(d) == 3);
    const int oc = static_cast<int>(all_signed_perms(d).size());
    for (int f = 0; f < oc; ++f)
      for (int m = 0; m < 3; ++m) CHECK(x.map_apply(d, f, m) == m);
  }
}

TEST_CASE("restrict_R rejects functors acting on trivial reps") {
  SiteCatalog cat = mini_catalog();
  int gi = cat.group_index("C2");
  IGSpace broken = sphere_igspace(cat, gi);
  // forge a nontrivial action on the dim-1 trivial rep's value
  int ti = cat.trivial_rep_index(gi, 1);
  std::swap(broken.objects[ti].action[1 * 3 + 1],
            broken.objects[ti].action[1 * 3 + 2]);
  CHECK_THROWS_AS(restrict_R(broken), Error);
  try {
    restrict_R(broken);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonTrivialActionOnTrivialRep);
  }
}

TEST_CASE("hand-derived extension of the sphere restriction at the sign rep") {
  SiteCatalog cat = mini_catalog();
  ISpace x = restrict_R(sphere_global(cat));
  int gi = cat.group_index("C2");
  Extension ext = extend_E(x, cat, gi);
  int sign_idx = cat.rep_index_by_label(gi, "sign");
  const KanResult& kr = ext.per_rep[sign_idx];

  // universe pairs (s, x) with s in {+1, -1}, x in {*, +, -}; the relation
  // [-1, x] ~ [+1, -x] collapses to three classes, canonical reps with s = id
  REQUIRE(kr.classes.size() == 3);
  CHECK(kr.base_class == 0);
  CHECK(kr.classes[0] == std::pair<uint16_t, uint16_t>{0, 0});
  CHECK(kr.classes[1] == std::pair<uint16_t, uint16_t>{0, 1});
  CHECK(kr.classes[2] == std::pair<uint16_t, uint16_t>{0, 2});
  // [-1, +] lands with [+1, -]
  CHECK(kr.class_of[1 * 3 + 1] == 2);
  CHECK(kr.class_of[1 * 3 + 2] == 1);
  // g swaps the two non-base classes
  CHECK(kr.action[1 * 3 + 1] == 2);
  CHECK(kr.action[1 * 3 + 2] == 1);
  CHECK(kr.action[1 * 3 + 0] == 0);

  // and the extension is isomorphic to the sphere at every object
  auto iso = find_natural_iso(ext.space, sphere_igspace(cat, gi));
  CHECK(iso.has_value());
}

TEST_CASE("extension at trivial reps bijects with the functor values") {
  SiteCatalog cat = mini_catalog();
  for (int i = 0; i < 5; ++i) {
    ISpace x = random_ispace(17, i, cat.dim_cap);
    GlobalExtension ex = extend_E_global(x, cat);
    for (int gi = 0; gi < cat.group_count(); ++gi)
      for (int d = 0; d <= cat.dim_cap; ++d) {
        const KanResult& kr = ex.kan[gi][cat.trivial_rep_index(gi, d)];
        CHECK(static_cast<int>(kr.classes.size()) == x.value_size(d));
      }
  }
}

TEST_CASE("extending the one-point functor stays one point") {
  SiteCatalog cat = mini_catalog();
  ISpace x = restrict_R(constant_global(cat, pointed_set_of_size(1)));
  GlobalExtension ex = extend_E_global(x, cat);
  for (int gi = 0; gi < cat.group_count(); ++gi)
    for (int ri = 0; ri < cat.rep_count(gi); ++ri)
      CHECK(ex.space.components[gi].objects[ri].size() == 1);
  CHECK(check_global(ex.space).all_pass());
}

TEST_CASE("extensions are lawful global families") {
  SiteCatalog cat = mini_catalog();
  for (int i = 0; i < 3; ++i) {
    ISpace x = random_ispace(23, i, cat.dim_cap);
    GlobalExtension ex = extend_E_global(x, cat);
    CHECK(check_global(ex.space).all_pass());
    for (int gi = 0; gi < cat.group_count(); ++gi)
      CHECK(check_igspace(ex.space.components[gi]).all_pass());
  }
}

TEST_CASE("counit of the global sphere is the sign-rep isomorphism") {
  SiteCatalog cat = mini_catalog();
  GlobalSpace sphere = sphere_global(cat);
  AdjunctionData data = build_counit(sphere);
  int gi = cat.group_index("C2");
  int sign_idx = cat.rep_index_by_label(gi, "sign");
  const auto& eps = data.eps[gi][sign_idx];
  // classes [id,*],[id,+],[id,-] map to *, +, - of S(sign)
  REQUIRE(eps.size() == 3);
  CHECK(eps[0] == 0);
  CHECK(eps[1] == 1);
  CHECK(eps[2] == 2);
}

TEST_CASE("counit of a constant functor is the identity on the point") {
  SiteCatalog cat = mini_catalog();
  GlobalSpace c = constant_global(cat, pointed_set_of_size(1));
  AdjunctionData data = build_counit(c);
  for (int gi = 0; gi < cat.group_count(); ++gi)
    for (int ri = 0; ri < cat.rep_count(gi); ++ri) {
      REQUIRE(data.eps[gi][ri].size() == 1);
      CHECK(data.eps[gi][ri][0] == 0);
    }
}

TEST_CASE("adjunction battery passes for built-ins and seeded instances") {
  SiteCatalog cat = mini_catalog();
  CHECK(check_adjunction(sphere_global(cat), "sphere").all_pass());
  CHECK(check_adjunction(constant_global(cat, pointed_set_of_size(1)), "c1")
            .all_pass());
  CHECK(check_adjunction(suspension_global(cat, pointed_set_of_size(3)), "s3")
            .all_pass());
  for (int i = 0; i < 10; ++i) {
    ISpace x = random_ispace(31, i, cat.dim_cap);
    CHECK(check_adjunction_ispace(x, cat, x.name).all_pass());
  }
}

TEST_CASE("a fault injected into phi breaks the two-sided inverse") {
  SiteCatalog cat = mini_catalog();
  GlobalSpace sphere = sphere_global(cat);
  // corrupt phi at the hom C2 -> e over the dim-1 trivial rep of e
  int gi = cat.group_index("C2");
  int k = cat.hom_to_trivial(gi);
  int eg = cat.trivial_group_index();
  int ti = cat.trivial_rep_index(eg, 1);
  std::swap(sphere.phi[k][ti][1], sphere.phi[k][ti][2]);
  AdjunctionData data = build_counit(sphere);
  // eps o nu and nu o eps are still inverse bijections here, but the
  // corrupted phi destroys equivariance of eps, which check_adjunction
  // reports; with the swap, eps(nu(y)) = y can also fail at the sign rep
  Report r = check_adjunction(sphere, "sphere");
  CHECK(!r.all_pass());
  bool witnessed = false;
  for (const CheckResult& c : r.checks)
    if (!c.pass && !c.witness.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("triangle identities hold for seeded random instances") {
  SiteCatalog cat = mini_catalog();
  for (int i = 0; i < 10; ++i) {
    ISpace x = random_ispace(57, i, cat.dim_cap);
    Report r = check_triangles_ispace(x, cat, x.name);
    CHECK(r.all_pass());
  }
  CHECK(check_triangles(sphere_global(cat), "sphere").all_pass());
}

TEST_CASE("extension is functorial on I-space maps") {
  SiteCatalog cat = mini_catalog();
  Rng rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    ISpace x = random_ispace(81, trial * 3, cat.dim_cap);
    ISpace y = random_ispace(81, trial * 3 + 1, cat.dim_cap);
    ISpace z = random_ispace(81, trial * 3 + 2, cat.dim_cap);
    auto f = random_ispace_map(x, y, rng);
    auto g = random_ispace_map(y, z, rng);
    GlobalExtension ex = extend_E_global(x, cat);
    GlobalExtension ey = extend_E_global(y, cat);
    GlobalExtension ez = extend_E_global(z, cat);
    GlobalMap ef = extend_map(f, ex, ey, "Ef");
    GlobalMap eg = extend_map(g, ey, ez, "Eg");
    CHECK(check_global_map(ef, ex.space, ey.space).all_pass());
    CHECK(check_global_map(eg, ey.space, ez.space).all_pass());
    // E(g o f) = E(g) o E(f) on class representatives
    std::vector<std::vector<int16_t>> gf(f.size());
    for (size_t d = 0; d < f.size(); ++d) {
      gf[d].resize(f[d].size());
      for (size_t e = 0; e < f[d].size(); ++e) gf[d][e] = g[d][f[d][e]];
    }
    GlobalMap egf = extend_map(gf, ex, ez, "Egf");
    GlobalMap composed = compose_global_maps(eg, ef);
    CHECK(egf.comp == composed.comp);
  }
}

TEST_CASE("counit naturality: eps commutes with extended maps") {
  SiteCatalog cat = mini_catalog();
  Rng rng(131);
  ISpace x = random_ispace(143, 0, cat.dim_cap);
  ISpace y = random_ispace(143, 1, cat.dim_cap);
  auto f = random_ispace_map(x, y, rng);
  GlobalExtension ex = extend_E_global(x, cat);
  GlobalExtension ey = extend_E_global(y, cat);
  GlobalMap ef = extend_map(f, ex, ey, "Ef");
  // A = EX, B = EY, map EF: eps_B o E(R(EF)) = EF o eps_A pointwise
  AdjunctionData da = build_counit(ex.space);
  AdjunctionData db = build_counit(ey.space);
  for (int gi = 0; gi < cat.group_count(); ++gi)
    for (int vi = 0; vi < cat.rep_count(gi); ++vi) {
      const KanResult& ka = da.era.kan[gi][vi];
      const KanResult& kb = db.era.kan[gi][vi];
      const int d = cat.rep(gi, vi).dim;
      const int eg = cat.trivial_group_index();
      for (size_t c = 0; c < ka.classes.size(); ++c) {
        auto [s, e] = ka.classes[c];
        // R(EF) at dim d sends the class e (of E_e X) through EF over e
        int fe = ef.comp[eg][cat.trivial_rep_index(eg, d)][e];
        int lhs = db.eps[gi][vi][kb.class_of[s * kb.source_size + fe]];
        int rhs = ef.comp[gi][vi][da.eps[gi][vi][c]];
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("internal smash with the unit is the identity up to natural iso") {
  SiteCatalog cat = mini_catalog();
  int gi = cat.group_index("C2");
  IGSpace sphere = sphere_igspace(cat, gi);
  IGSpace u = unit_igspace(cat, gi);
  IGSpace su = internal_smash(sphere, u);
  CHECK(find_natural_iso(su, sphere).has_value());
  IGSpace us = internal_smash(u, sphere);
  CHECK(find_natural_iso(us, sphere).has_value());

  IGSpace susp = suspension_igspace(cat, gi, pointed_set_of_size(3));
  CHECK(find_natural_iso(internal_smash(susp, u), susp).has_value());
  CHECK(check_igspace(internal_smash(susp, u)).all_pass());
}

TEST_CASE("one-point functor smashed with anything is one point") {
  SiteCatalog cat = mini_catalog();
  int gi = cat.group_index("C2");
  IGSpace pt = constant_igspace(cat, gi, pointed_set_of_size(1));
  IGSpace sphere = sphere_igspace(cat, gi);
  IGSpace sm = internal_smash(pt, sphere);
  for (int ri = 0; ri < cat.rep_count(gi); ++ri)
    CHECK(sm.objects[ri].size() == 1);
}

TEST_CASE("smash of the sphere with itself has 4^d classes, not 2^d") {
  // morphisms of the site never mix dimensions, so the block for the split
  // (d1, d2) contributes the induced set B_d x_{B_d1 x B_d2} (S^d1 ^ S^d2)
  // of size C(d, d1) * 2^d; summing over splits gives 4^d non-base classes
  SiteCatalog cat = mini_catalog();
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    IGSpace sphere = sphere_igspace(cat, gi);
    IGSpace ss = internal_smash(sphere, sphere);
    CHECK(check_igspace(ss).all_pass());
    for (int d = 0; d <= cat.dim_cap; ++d) {
      int ti = cat.trivial_rep_index(gi, d);
      CHECK(ss.objects[ti].size() - 1 == 1 << (2 * d));
    }
    CHECK(!find_natural_iso(ss, sphere).has_value());
  }
}

TEST_CASE("catalogs missing a trivial dimension are rejected") {
  SiteCatalog cat;
  cat.name = "gap";
  cat.dim_cap = 2;
  GroupPtr e = trivial_group();
  cat.groups = {e};
  cat.homs = {identity_hom(e)};
  cat.reps = {{trivial_rep(e, 0), trivial_rep(e, 2)}};  // no dim 1
  cat.gsets.resize(1);
  CHECK_THROWS_AS(cat.finalize(), Error);
  try {
    cat.finalize();
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::CatalogIncomplete);
  }
}
