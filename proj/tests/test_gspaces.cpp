#include <doctest.h>

#include "equicat/catalog.hpp"
#include "equicat/error.hpp"
#include "equicat/gspace_checks.hpp"
#include "equicat/gset.hpp"

using namespace equicat;

namespace {

PointedGSet swap_set(const GroupPtr& c2) {
  return make_pointed_gset(c2, {"*", "a", "b"}, 0, {0, 1, 2, 0, 2, 1}, "swap");
}

}  // namespace

TEST_CASE("smash: unit, counting, and the diagonal action") {
  GroupPtr c2 = cyclic_group(2, "C2");
  PointedGSet x = swap_set(c2);
  PointedGSet s0 = s0_gset(c2);

  PointedGSet unit = smash(x, s0);
  CHECK(unit.size() == x.size());

  PointedGSet sq = smash(x, x);
  CHECK(sq.size() - 1 == (x.size() - 1) * (x.size() - 1));
  // g swaps (a,a) <-> (b,b) and (a,b) <-> (b,a)
  int aa = smash_pair_index(x, x, 1, 1);
  int bb = smash_pair_index(x, x, 2, 2);
  int ab = smash_pair_index(x, x, 1, 2);
  int ba = smash_pair_index(x, x, 2, 1);
  CHECK(sq.act(1, aa) == bb);
  CHECK(sq.act(1, ab) == ba);
  CHECK(sq.act(1, 0) == 0);

  GroupPtr e = trivial_group();
  CHECK_THROWS_AS(smash(x, s0_gset(e)), Error);
}

TEST_CASE("based self-maps of the swap set: nine maps, three equivariant") {
  GroupPtr c2 = cyclic_group(2, "C2");
  PointedGSet x = swap_set(c2);
  MapSpace ms = map_space(x, x);
  CHECK(ms.size() == 9);
  std::vector<PointedMap> eq = equivariant_maps(x, x);
  CHECK(eq.size() == 3);
  bool has_identity = false;
  for (const PointedMap& f : eq)
    has_identity = has_identity || f == identity_map(x.size());
  CHECK(has_identity);
}

TEST_CASE("restriction along the trivial inclusion kills the action") {
  GroupPtr e = trivial_group();
  GroupPtr c2 = cyclic_group(2, "C2");
  PointedGSet x = swap_set(c2);
  GroupHom incl = make_hom(e, c2, {0}, "incl");
  PointedGSet rx = restrict_gset(incl, x);
  CHECK(rx.elements == x.elements);
  CHECK(rx.has_trivial_action());
}

TEST_CASE("map space ranks invert enumeration and actions compose") {
  GroupPtr c2 = cyclic_group(2, "C2");
  GroupPtr c3 = cyclic_group(3, "C3");
  PointedGSet x = swap_set(c2);
  PointedGSet y = make_pointed_gset(c3, {"*", "p", "q", "r"}, 0,
                                    {0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2}, "rot");
  MapSpace ms = map_space(x, y);
  CHECK(ms.size() == 16);
  for (int f = 0; f < ms.size(); ++f) CHECK(ms.rank_of(ms.elements[f]) == f);
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 3; ++h)
      for (int g2 = 0; g2 < 2; ++g2)
        for (int h2 = 0; h2 < 3; ++h2)
          for (int f = 0; f < ms.size(); ++f)
            CHECK(ms.action(c2->mul(g, g2), c3->mul(h, h2), f) ==
                  ms.action(g, h, ms.action(g2, h2, f)));
}

TEST_CASE("gset validation rejects broken actions") {
  GroupPtr c2 = cyclic_group(2, "C2");
  // moves the basepoint
  CHECK_THROWS_AS(
      make_pointed_gset(c2, {"*", "a"}, 0, {0, 1, 1, 0}, "bad"), Error);
  // not a group action: g twice is not the identity
  CHECK_THROWS_AS(
      make_pointed_gset(c2, {"*", "a", "b", "c"}, 0,
                        {0, 1, 2, 3, 0, 2, 3, 1}, "bad2"),
      Error);
}

TEST_CASE("fibration and structural law suites pass on the shipped catalog") {
  SiteCatalog cat = standard_catalog();
  Report top = check_top_fibration(cat);
  CHECK(top.all_pass());
  Report laws = check_gspace_laws(cat);
  CHECK(laws.all_pass());
}
