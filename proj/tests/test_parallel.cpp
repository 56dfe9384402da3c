#include <doctest.h>

#include "equicat/catalog.hpp"
#include "equicat/functor_checks.hpp"
#include "equicat/kan.hpp"
#include "equicat/parallel.hpp"
#include "equicat/site_checks.hpp"
#include "equicat/sphere.hpp"
#include "equicat/suite.hpp"

using namespace equicat;

namespace {

bool reports_identical(const Report& a, const Report& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (size_t i = 0; i < a.checks.size(); ++i)
    if (a.checks[i].name != b.checks[i].name ||
        a.checks[i].pass != b.checks[i].pass ||
        a.checks[i].witness != b.checks[i].witness)
      return false;
  return true;
}

struct ParallelGuard {
  ~ParallelGuard() { par::set_parallel(true); }
};

}  // namespace

TEST_CASE("sweep outcomes agree between the serial and OpenMP paths") {
  auto fail_at = [](long long i) -> std::optional<std::string> {
    if (i % 37 == 5) return "item " + std::to_string(i);
    return std::nullopt;
  };
  par::SweepOutcome serial = par::sweep_serial(1000, fail_at);
  par::SweepOutcome parallel = par::sweep_parallel(1000, fail_at);
  CHECK(serial.pass == parallel.pass);
  CHECK(serial.fail_index == parallel.fail_index);
  CHECK(serial.witness == parallel.witness);
  CHECK(serial.fail_index == 5);

  auto all_pass = [](long long) -> std::optional<std::string> {
    return std::nullopt;
  };
  CHECK(par::sweep_serial(1000, all_pass).pass);
  CHECK(par::sweep_parallel(1000, all_pass).pass);
  CHECK(par::sweep_parallel(0, fail_at).pass);
}

TEST_CASE("checker reports are identical under both execution policies") {
  ParallelGuard guard;
  SiteCatalog cat = [&] {
    CatalogSpec spec;
    spec.name = "mini";
    spec.dim_cap = 2;
    spec.groups = {trivial_group(), cyclic_group(2, "C2"), symmetric_3()};
    SignedPerm neg(1);
    neg.signs[0] = -1;
    spec.seed_reps = {make_rep(spec.groups[1], 1, {sp_identity(1), neg}, "sign")};
    spec.gsets = {s0_gset(spec.groups[1])};
    return build_catalog(spec);
  }();

  par::set_parallel(false);
  Report serial;
  serial.merge(check_site_axioms(cat));
  serial.merge(check_restriction_object(cat));
  serial.merge(check_grothendieck(cat));
  serial.merge(check_igspace(sphere_igspace(cat, 1)));
  serial.merge(check_adjunction(sphere_global(cat), "sphere"));

  par::set_parallel(true);
  Report parallel;
  parallel.merge(check_site_axioms(cat));
  parallel.merge(check_restriction_object(cat));
  parallel.merge(check_grothendieck(cat));
  parallel.merge(check_igspace(sphere_igspace(cat, 1)));
  parallel.merge(check_adjunction(sphere_global(cat), "sphere"));

  CHECK(reports_identical(serial, parallel));
}

TEST_CASE("failure witnesses match between the two paths") {
  ParallelGuard guard;
  CatalogSpec spec;
  spec.name = "mini";
  spec.dim_cap = 2;
  spec.groups = {trivial_group(), cyclic_group(2, "C2")};
  SignedPerm neg(1);
  neg.signs[0] = -1;
  spec.seed_reps = {make_rep(spec.groups[1], 1, {sp_identity(1), neg}, "sign")};
  SiteCatalog cat = build_catalog(spec);

  IGSpace broken = sphere_igspace(cat, 1);
  int sign_idx = cat.rep_index_by_label(1, "sign");
  int p = broken.pair_id(sign_idx, sign_idx);
  std::swap(broken.morph[p][1 * 3 + 1], broken.morph[p][1 * 3 + 2]);

  par::set_parallel(false);
  Report serial = check_igspace(broken);
  par::set_parallel(true);
  Report parallel = check_igspace(broken);
  CHECK(!serial.all_pass());
  CHECK(reports_identical(serial, parallel));
}
