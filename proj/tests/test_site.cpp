#include <doctest.h>

#include <set>

#include "equicat/catalog.hpp"
#include "equicat/error.hpp"
#include "equicat/hom_space.hpp"
#include "equicat/instance_gen.hpp"
#include "equicat/site_checks.hpp"

using namespace equicat;

namespace {

Rep sign_rep(const GroupPtr& c2) {
  SignedPerm neg(1);
  neg.signs[0] = -1;
  return make_rep(c2, 1, {sp_identity(1), neg}, "sign");
}

SiteCatalog mini_catalog() {
  CatalogSpec spec;
  spec.name = "mini";
  spec.dim_cap = 2;
  GroupPtr e = trivial_group();
  GroupPtr c2 = cyclic_group(2, "C2");
  spec.groups = {e, c2};
  spec.seed_reps = {sign_rep(c2)};
  return build_catalog(spec);
}

}  // namespace

TEST_CASE("restriction: identity, trivial group, and composition") {
  GroupPtr e = trivial_group();
  GroupPtr c2 = cyclic_group(2, "C2");
  Rep sign = sign_rep(c2);

  Rep same = rep_restrict(identity_hom(c2), sign);
  CHECK(same == sign);

  GroupHom incl = make_hom(e, c2, {0}, "incl");
  Rep restricted = rep_restrict(incl, sign);
  CHECK(restricted.dim == 1);
  CHECK(restricted.rho[0].is_identity());
  CHECK(restricted == trivial_rep(e, 1));

  CHECK_THROWS_AS(rep_restrict(incl, trivial_rep(e, 1)), Error);
}

TEST_CASE("direct sum: strict unit and the block matrix display") {
  GroupPtr c2 = cyclic_group(2, "C2");
  Rep sign = sign_rep(c2);
  Rep zero = trivial_rep(c2, 0);

  Rep right_unit = rep_direct_sum(sign, zero);
  CHECK(right_unit.dim == 1);
  CHECK(right_unit.rho == sign.rho);

  Rep double_sign = rep_direct_sum(sign, sign);
  CHECK(double_sign.dim == 2);
  CHECK(double_sign.rho[1].signs[0] == -1);
  CHECK(double_sign.rho[1].signs[1] == -1);
  CHECK(double_sign.rho[1].perm[0] == 0);
  CHECK(double_sign.rho[1].perm[1] == 1);

  Rep mixed = rep_direct_sum(trivial_rep(c2, 1), sign);
  CHECK(fixed_subspace_dim(mixed, {0, 1}) == 1);
}

TEST_CASE("hom spaces: counts, conjugation, and the action laws") {
  GroupPtr c2 = cyclic_group(2, "C2");
  Rep sign = sign_rep(c2);
  Rep triv1 = trivial_rep(c2, 1);
  Rep triv2 = trivial_rep(c2, 2);

  CHECK(hom_space(triv1, triv2).size() == 0);
  CHECK(hom_space(triv2, triv2).size() == 8);
  CHECK(hom_space(trivial_rep(c2, 3), trivial_rep(c2, 3)).size() == 48);

  // conjugating the identity map of the sign rep fixes it
  HomSpace hs = hom_space(sign, sign);
  int id_rank = 0;
  CHECK(hs.action(1, 1, id_rank) == id_rank);

  // V = sign, W = trivial: g . id = -id
  HomSpace mixed = hom_space(sign, triv1);
  SignedPerm neg(1);
  neg.signs[0] = -1;
  CHECK(mixed.action(1, 1, 0) == sp_lex_rank(neg));

  // action laws and the matrix identity, exhaustively on a small pair
  Rep swap2 = [&] {
    SignedPerm sw(2);
    sw.perm = {1, 0};
    return make_rep(c2, 2, {sp_identity(2), sw}, "swap2");
  }();
  HomSpace big = hom_space(swap2, rep_direct_sum(sign, triv1));
  const auto& elems = big.elements();
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 2; ++h)
      for (int f = 0; f < big.size(); ++f) {
        // matrix identity
        SignedPerm expected = sp_compose(
            sp_compose(big.target().rho[h], elems[f]),
            sp_inverse(big.source().rho[g]));
        CHECK(big.action(g, h, f) == sp_lex_rank(expected));
        // group action law
        for (int g2 = 0; g2 < 2; ++g2)
          for (int h2 = 0; h2 < 2; ++h2)
            CHECK(big.action(c2->mul(g, g2), c2->mul(h, h2), f) ==
                  big.action(g, h, big.action(g2, h2, f)));
      }
  for (int f = 0; f < big.size(); ++f) CHECK(big.action(0, 0, f) == f);
}

TEST_CASE("diagonal hom spaces restrict the two-sided action") {
  GroupPtr c2 = cyclic_group(2, "C2");
  Rep sign = sign_rep(c2);
  Rep triv = trivial_rep(c2, 1);

  DiagonalHomSpace diag = diagonal_hom(triv, triv);
  for (int g = 0; g < 2; ++g)
    for (int f = 0; f < diag.size(); ++f) CHECK(diag.action(g, f) == f);

  DiagonalHomSpace mixed = diagonal_hom(sign, triv);
  SignedPerm neg(1);
  neg.signs[0] = -1;
  CHECK(mixed.action(1, 0) == sp_lex_rank(neg));

  GroupPtr e = trivial_group();
  CHECK_THROWS_AS(diagonal_hom(sign, trivial_rep(e, 1)), Error);
}

TEST_CASE("restriction composes strictly over random catalog picks") {
  SiteCatalog cat = standard_catalog();
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int a = rng.below(static_cast<int>(cat.homs.size()));
    const GroupHom& alpha = cat.homs[a];
    std::vector<int> candidates;
    for (int b = 0; b < static_cast<int>(cat.homs.size()); ++b)
      if (cat.homs[b].source.get() == alpha.target.get()) candidates.push_back(b);
    const GroupHom& beta =
        cat.homs[candidates[rng.below(static_cast<int>(candidates.size()))]];
    int kg = cat.group_index(beta.target);
    const Rep& v = cat.rep(kg, rng.below(cat.rep_count(kg)));
    CHECK(rep_restrict(alpha, rep_restrict(beta, v)) ==
          rep_restrict(compose_homs(beta, alpha), v));
  }
}

TEST_CASE("site axiom suite passes on the mini catalog") {
  SiteCatalog cat = mini_catalog();
  Report r = check_site_axioms(cat);
  CHECK(r.all_pass());
  CHECK(r.checks.size() == 4);
  Report fr = check_restriction_object(cat);
  CHECK(fr.all_pass());
  Report gr = check_grothendieck(cat);
  CHECK(gr.all_pass());
}

TEST_CASE("catalogs on the trivial group alone pass vacuously") {
  CatalogSpec spec;
  spec.name = "point";
  spec.dim_cap = 1;
  spec.groups = {trivial_group()};
  SiteCatalog cat = build_catalog(spec);
  CHECK(check_site_axioms(cat).all_pass());
  CHECK(check_restriction_object(cat).all_pass());
}

TEST_CASE("rep validation rejects corrupted homomorphism data") {
  GroupPtr c2 = cyclic_group(2, "C2");
  SignedPerm neg(1);
  neg.signs[0] = -1;
  // rho(g)^2 must equal rho(e); sending both elements to -1 breaks it
  CHECK_THROWS_AS(make_rep(c2, 1, {neg, neg}, "broken"), Error);
}

TEST_CASE("catalog closure under restriction and sums, labels unique") {
  SiteCatalog cat = standard_catalog();
  for (int k = 0; k < static_cast<int>(cat.homs.size()); ++k) {
    int tg = cat.group_index(cat.homs[k].target);
    int sg = cat.group_index(cat.homs[k].source);
    for (int vi = 0; vi < cat.rep_count(tg); ++vi) {
      int rvi = cat.restricted_rep_index(k, vi);
      CHECK(cat.rep(sg, rvi) == rep_restrict(cat.homs[k], cat.rep(tg, vi)));
    }
  }
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    std::set<std::string> labels;
    for (int ri = 0; ri < cat.rep_count(gi); ++ri)
      CHECK(labels.insert(cat.rep(gi, ri).label).second);
    for (int d = 0; d <= cat.dim_cap; ++d)
      CHECK(cat.rep(gi, cat.trivial_rep_index(gi, d)).dim == d);
  }
}
