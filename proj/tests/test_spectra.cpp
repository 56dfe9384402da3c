#include <doctest.h>

#include "equicat/catalog.hpp"
#include "equicat/kan.hpp"
#include "equicat/spectrum.hpp"
#include "equicat/sphere.hpp"

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

TEST_CASE("sphere values: counts and the sign action") {
  GroupPtr c2 = cyclic_group(2, "C2");
  CHECK(sphere_gset(trivial_rep(c2, 0)).size() == 2);
  CHECK(sphere_gset(trivial_rep(c2, 2)).size() == 5);

  SignedPerm neg(1);
  neg.signs[0] = -1;
  Rep sign = make_rep(c2, 1, {sp_identity(1), neg}, "sign");
  PointedGSet s = sphere_gset(sign);
  // g swaps + and -, so no non-base fixed point
  CHECK(s.act(1, 1) == 2);
  CHECK(s.act(1, 2) == 1);
  int fixed = 0;
  for (int x = 1; x < s.size(); ++x)
    if (s.act(1, x) == x) ++fixed;
  CHECK(fixed == 0);
  CHECK(sp_has_negative_cycle(sign.rho[1]));
}

TEST_CASE("sphere smash iso: unit, double flip, strict associativity") {
  GroupPtr c2 = cyclic_group(2, "C2");
  SignedPerm neg(1);
  neg.signs[0] = -1;
  Rep sign = make_rep(c2, 1, {sp_identity(1), neg}, "sign");
  Rep zero = trivial_rep(c2, 0);
  Rep one = trivial_rep(c2, 1);

  // either factor zero-dimensional gives the unit identification
  PointedMap right = sphere_smash_iso(sign, zero);
  PointedGSet ss = sphere_gset(sign);
  PointedGSet s0 = sphere_gset(zero);
  for (int x = 1; x < ss.size(); ++x)
    CHECK(right(smash_pair_index(ss, s0, x, 1)) == x);

  // sign ^ sign: concatenation, with g acting by the double flip
  PointedMap iso = sphere_smash_iso(sign, sign);
  Rep doubled = rep_direct_sum(sign, sign);
  PointedGSet target = sphere_gset(doubled);
  for (int x = 1; x < ss.size(); ++x)
    for (int t = 1; t < ss.size(); ++t) {
      int i = smash_pair_index(ss, ss, x, t);
      // equivariance through the diagonal action
      int gi2 = smash_pair_index(ss, ss, ss.act(1, x), ss.act(1, t));
      CHECK(target.act(1, iso(i)) == iso(gi2));
    }

  // strict associativity of concatenation on a triple of lines
  PointedGSet s1 = sphere_gset(one);
  Rep two = rep_direct_sum(one, one);
  PointedGSet s2 = sphere_gset(two);
  PointedMap i12 = sphere_smash_iso(one, one);
  PointedMap i12_3 = sphere_smash_iso(two, one);
  PointedMap i23 = sphere_smash_iso(one, one);
  PointedMap i1_23 = sphere_smash_iso(one, two);
  for (int a = 1; a < s1.size(); ++a)
    for (int b = 1; b < s1.size(); ++b)
      for (int c = 1; c < s1.size(); ++c) {
        int left = i12_3(smash_pair_index(s2, s1, i12(smash_pair_index(s1, s1, a, b)), c));
        int rightv = i1_23(smash_pair_index(s1, s2, a, i23(smash_pair_index(s1, s1, b, c))));
        CHECK(left == rightv);
      }
}

TEST_CASE("sphere maps are functorial") {
  for (int d = 0; d <= 3; ++d) {
    const auto& perms = all_signed_perms(d);
    for (size_t i = 0; i < perms.size(); ++i)
      for (size_t j = 0; j < perms.size(); ++j)
        CHECK(sphere_map(sp_compose(perms[i], perms[j])) ==
              compose_maps(sphere_map(perms[i]), sphere_map(perms[j])));
  }
}

TEST_CASE("sphere spectrum passes all axioms, including the global ones") {
  SiteCatalog cat = mini_catalog();
  GlobalSpace sphere = sphere_global(cat);
  GlobalSpectrum gs = sphere_global_spectrum(sphere);
  Report r = check_global_spectrum(gs);
  CHECK(r.all_pass());
  CHECK(check_sphere_restriction(cat).all_pass());
}

TEST_CASE("concatenation respects the double sign flip") {
  SiteCatalog cat = mini_catalog();
  int gi = cat.group_index("C2");
  IGSpace base = sphere_igspace(cat, gi);
  Spectrum spec = sphere_spectrum(base);
  int sign_idx = cat.rep_index_by_label(gi, "sign");
  int p = spec.idx.at(sign_idx, sign_idx, cat.rep_count(gi));
  REQUIRE(p >= 0);
  int sum_idx = cat.sum_rep_index(gi, sign_idx, sign_idx);
  const PointedGSet& sv = spec.sphere_at[sign_idx];
  const PointedGSet& target = spec.sphere_at[sum_idx];
  // (+ , -) concatenates to +-
  int i = smash_pair_index(sv, sv, 1, 2);
  std::vector<int8_t> pm = {1, -1};
  CHECK(spec.sigma[p][i] == sphere_index(pm));
  // g acts on S(sign (+) sign) by the double flip
  std::vector<int8_t> mp = {-1, 1};
  CHECK(target.act(1, sphere_index(pm)) == sphere_index(mp));
}

TEST_CASE("one-point functor with the collapse action is a spectrum") {
  SiteCatalog cat = mini_catalog();
  int gi = cat.group_index("C2");
  IGSpace pt = constant_igspace(cat, gi, pointed_set_of_size(1));
  Spectrum spec;
  spec.base = &pt;
  spec.name = "pt";
  spec.idx = spectrum_pair_index(cat, gi);
  for (int ri = 0; ri < cat.rep_count(gi); ++ri)
    spec.sphere_at.push_back(sphere_gset(cat.rep(gi, ri)));
  for (auto [vi, wi] : spec.idx.pairs) {
    (void)wi;
    spec.sigma.emplace_back(
        1 + (pt.objects[vi].size() - 1) * (spec.sphere_at[wi].size() - 1), 0);
  }
  CHECK(check_spectrum(spec).all_pass());
}

TEST_CASE("shifting one sigma component breaks associativity with a witness") {
  SiteCatalog cat = mini_catalog();
  int gi = cat.group_index("C2");
  IGSpace base = sphere_igspace(cat, gi);
  Spectrum spec = sphere_spectrum(base);
  int t1 = cat.trivial_rep_index(gi, 1);
  int p = spec.idx.at(t1, t1, cat.rep_count(gi));
  // precompose with the swap of the two non-base smash points
  std::swap(spec.sigma[p][1], spec.sigma[p][2]);
  Report r = check_spectrum(spec);
  CHECK(!r.all_pass());
  bool assoc_failed = false;
  for (const CheckResult& c : r.checks)
    if (!c.pass && c.name.find("associativity") != std::string::npos &&
        !c.witness.empty())
      assoc_failed = true;
  CHECK(assoc_failed);
}

TEST_CASE("the sphere's lax data derives exactly the concatenation action") {
  SiteCatalog cat = mini_catalog();
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    IGSpace base = sphere_igspace(cat, gi);
    LaxMonoidal lax = sphere_lax(base);
    Report r;
    std::optional<Spectrum> derived = spectrum_from_lax(lax, r);
    CHECK(r.all_pass());
    REQUIRE(derived.has_value());
    CHECK(derived->sigma == sphere_spectrum(base).sigma);
    CHECK(check_spectrum(*derived).all_pass());
  }
}

TEST_CASE("suspension spectrum of the two-point set passes") {
  SiteCatalog cat = mini_catalog();
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    IGSpace susp = suspension_igspace(cat, gi, pointed_set_of_size(2));
    Spectrum spec = suspension_spectrum(susp, pointed_set_of_size(2));
    CHECK(check_spectrum(spec).all_pass());
  }
}

TEST_CASE("a non-associative multiplication is surfaced before derivation") {
  SiteCatalog cat = mini_catalog();
  int gi = cat.group_index("C2");
  IGSpace base = sphere_igspace(cat, gi);
  LaxMonoidal lax = sphere_lax(base);
  int t1 = cat.trivial_rep_index(gi, 1);
  int p = lax.idx.at(t1, t1, cat.rep_count(gi));
  std::swap(lax.mult[p][1], lax.mult[p][2]);
  Report r;
  std::optional<Spectrum> derived = spectrum_from_lax(lax, r);
  CHECK(!derived.has_value());
  CHECK(!r.all_pass());
}

TEST_CASE("suspension counts: (|X0|-1) * 2^n non-base points") {
  SiteCatalog cat = mini_catalog();
  int gi = cat.group_index("C2");
  IGSpace susp = suspension_igspace(cat, gi, pointed_set_of_size(3));
  int sign_idx = cat.rep_index_by_label(gi, "sign");
  CHECK(susp.objects[sign_idx].size() - 1 == 2 * 2);
}

TEST_CASE("fixed-point cross-oracle on the standard catalog") {
  SiteCatalog cat = standard_catalog();
  CHECK(check_sphere_fixed_points(cat).all_pass());
}

TEST_CASE("counit on the sphere is an isomorphism at every catalog object") {
  SiteCatalog cat = mini_catalog();
  GlobalSpace sphere = sphere_global(cat);
  AdjunctionData data = build_counit(sphere);
  for (int gi = 0; gi < cat.group_count(); ++gi)
    for (int ri = 0; ri < cat.rep_count(gi); ++ri) {
      const auto& eps = data.eps[gi][ri];
      const auto& nu = data.nu[gi][ri];
      CHECK(eps.size() == nu.size());
      for (size_t c = 0; c < eps.size(); ++c) CHECK(nu[eps[c]] == static_cast<int>(c));
    }
}
