// Acceptance gate: runs every shipped criterion at its stated budget and
// prints one pass/fail line per criterion. Exit code 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "equicat/catalog.hpp"
#include "equicat/functor_checks.hpp"
#include "equicat/gspace_checks.hpp"
#include "equicat/instance_gen.hpp"
#include "equicat/json_io.hpp"
#include "equicat/kan.hpp"
#include "equicat/site_checks.hpp"
#include "equicat/spectrum.hpp"
#include "equicat/sphere.hpp"
#include "equicat/suite.hpp"

using namespace equicat;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kData = EQUICAT_DATA_DIR;
const std::string kCli = EQUICAT_CLI_PATH;

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion(int n, const std::string& what, bool ok, double secs,
               double budget_secs) {
  bool in_budget = secs < budget_secs;
  if (!ok || !in_budget) ++g_failures;
  std::printf("[%s] criterion %2d: %s (%.1fs, budget %.0fs)\n",
              ok && in_budget ? "PASS" : "FAIL", n, what.c_str(), secs,
              budget_secs);
  std::fflush(stdout);
}

void dump_failures(const Report& r) {
  for (const CheckResult& c : r.checks)
    if (!c.pass)
      std::printf("        failed: %s\n        witness: %s\n", c.name.c_str(),
                  c.witness.c_str());
}

int run_cli(const std::string& args, std::string& output) {
  std::string cmd = kCli + " " + args + " > /tmp/equicat_acc_out.txt 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in("/tmp/equicat_acc_out.txt");
  std::ostringstream os;
  os << in.rdbuf();
  output = os.str();
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

}  // namespace

int main() {
  SiteCatalog cat = parse_catalog(load_json_file(kData + "/catalog.json"));
  std::printf("catalog '%s': %d groups, %zu homs, dim cap %d\n",
              cat.name.c_str(), cat.group_count(), cat.homs.size(),
              cat.dim_cap);

  // 1. site axioms and the restriction-object condition, exhaustively
  {
    auto t0 = Clock::now();
    Report r = check_site_axioms(cat);
    r.merge(check_restriction_object(cat));
    criterion(1, "site axioms + fibration restriction objects", r.all_pass(),
              seconds_since(t0), 60);
    dump_failures(r);
  }

  // 2. Grothendieck round trip: diagonal action = restricted two-sided action
  {
    auto t0 = Clock::now();
    Report r = check_grothendieck(cat);
    criterion(2, "Grothendieck diagonal round trip", r.all_pass(),
              seconds_since(t0), 10);
    dump_failures(r);
  }

  // 3. map-space fibration identity over every hom and shipped G-set
  {
    auto t0 = Clock::now();
    bool sizes_ok = true;
    for (int gi = 0; gi < cat.group_count(); ++gi)
      for (const PointedGSet& s : cat.gsets[gi]) sizes_ok &= s.size() <= 5;
    Report r = check_top_fibration(cat);
    r.merge(check_gspace_laws(cat));
    criterion(3, "map-space fibration identity and structural laws",
              sizes_ok && r.all_pass(), seconds_since(t0), 60);
    dump_failures(r);
  }

  // 4. adjunction equivalence: unit bijective, counit an equivariant
  //    bijection with exact inverse, both triangles, on the built-in
  //    functors and 50 seeded random instances
  {
    auto t0 = Clock::now();
    Report r;
    r.merge(check_adjunction(sphere_global(cat), "sphere"));
    r.merge(check_adjunction(constant_global(cat, pointed_set_of_size(1)),
                             "const1"));
    r.merge(check_adjunction(suspension_global(cat, pointed_set_of_size(3)),
                             "susp3"));
    r.merge(check_adjunction(suspension_global(cat, pointed_set_of_size(4)),
                             "susp4"));
    r.merge(check_adjunction(suspension_global(cat, pointed_set_of_size(5)),
                             "susp5"));
    const uint64_t seed = 1;
    for (int i = 0; i < 50; ++i) {
      ISpace x = random_ispace(seed, i, cat.dim_cap);
      r.merge(check_adjunction_ispace(x, cat, x.name));
    }
    criterion(4, "extension/restriction adjunction equivalence", r.all_pass(),
              seconds_since(t0), 300);
    dump_failures(r);
  }

  // 5. counit-on-sphere oracle against the hand-derived golden fixture
  {
    auto t0 = Clock::now();
    SiteCatalog mini =
        parse_catalog(load_json_file(kData + "/mini_catalog.json"));
    GlobalSpace sphere = sphere_global(mini);
    ISpace rx = restrict_R(sphere);
    GlobalExtension ex = extend_E_global(rx, mini);
    int gi = mini.group_index("C2");
    json computed = extension_to_json(ex, gi, rx)["reps"]["sign"];
    json golden = load_json_file(kData + "/golden/kan_sphere_c2_sign.json");
    golden.erase("comment");
    bool match = computed == golden;
    // and the counit is an isomorphism onto the sphere at the sign rep
    AdjunctionData data = build_counit(sphere);
    int sign_idx = mini.rep_index_by_label(gi, "sign");
    const auto& eps = data.eps[gi][sign_idx];
    const KanResult& kr = ex.kan[gi][sign_idx];
    bool two_classes = kr.classes.size() == 3 && kr.base_class == 0;
    bool swap_action = kr.action[1 * 3 + 1] == 2 && kr.action[1 * 3 + 2] == 1;
    bool eps_iso = eps.size() == 3 && eps[0] == 0 && eps[1] == 1 && eps[2] == 2;
    if (!match)
      std::printf("        golden mismatch:\n%s\nvs\n%s\n",
                  computed.dump(2).c_str(), golden.dump(2).c_str());
    criterion(5, "counit-on-sphere union-find oracle (golden fixture)",
              match && two_classes && swap_action && eps_iso,
              seconds_since(t0), 60);
  }

  // 6. spectrum axioms for the sphere, and Eq-(3) derivation reproduces sigma
  {
    auto t0 = Clock::now();
    GlobalSpace sphere = sphere_global(cat);
    GlobalSpectrum gs = sphere_global_spectrum(sphere);
    Report r = check_global_spectrum(gs);
    bool derived_ok = true;
    for (int gi = 0; gi < cat.group_count(); ++gi) {
      LaxMonoidal lax = sphere_lax(sphere.components[gi]);
      Report lr;
      std::optional<Spectrum> derived = spectrum_from_lax(lax, lr);
      r.merge(lr);
      derived_ok &= derived.has_value() &&
                    derived->sigma == gs.per_group[gi].sigma;
    }
    criterion(6, "sphere spectrum axioms + lax-derived action matches",
              r.all_pass() && derived_ok, seconds_since(t0), 60);
    dump_failures(r);
  }

  // 7. global coherence: cocycles over every composable pair, unit, and the
  //    trivial-action corollary, for the sphere and the suspensions
  {
    auto t0 = Clock::now();
    Report r = check_global(sphere_global(cat));
    r.merge(check_global(suspension_global(cat, pointed_set_of_size(3))));
    r.merge(check_global(suspension_global(cat, pointed_set_of_size(4))));
    r.merge(check_global(suspension_global(cat, pointed_set_of_size(5))));
    criterion(7, "global coherence of sphere and suspension families",
              r.all_pass(), seconds_since(t0), 60);
    dump_failures(r);
  }

  // 8. fixed-point cross-oracle: sign-vector enumeration vs projector rank
  {
    auto t0 = Clock::now();
    Report r = check_sphere_fixed_points(cat);
    criterion(8, "sphere fixed points vs averaging-projector rank",
              r.all_pass(), seconds_since(t0), 10);
    dump_failures(r);
  }

  // 9. fault sensitivity: each injected-fault fixture exits 1 and reports a
  //    non-empty witness through the CLI
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string out;
    int rc = run_cli("validate " + kData + "/faults/broken_rho_catalog.json", out);
    bool one_ok = rc == 1 && out.find("rho") != std::string::npos;
    if (!one_ok) std::printf("        broken_rho: rc=%d out=%s\n", rc, out.c_str());
    ok &= one_ok;
    const char* configs[] = {"phi_not_equivariant", "corrupted_morphism",
                             "lax_not_associative", "sigma_shifted",
                             "map_not_equivariant"};
    for (const char* name : configs) {
      rc = run_cli("suite --config " + kData + "/faults/" + name +
                       "_config.json --format json",
                   out);
      bool this_ok = rc == 1;
      json rep;
      if (this_ok) {
        rep = json::parse(out);
        bool witnessed = false;
        for (const json& c : rep["checks"])
          if (c["status"] == "fail" && c.contains("witness") &&
              !c["witness"].get<std::string>().empty())
            witnessed = true;
        this_ok = witnessed;
      }
      if (!this_ok)
        std::printf("        fixture %s: rc=%d\n%s\n", name, rc, out.c_str());
      ok &= this_ok;
    }
    criterion(9, "six injected faults all exit 1 with witnesses", ok,
              seconds_since(t0), 60);
  }

  // 10. determinism: two full-suite runs with the same seed are
  //     byte-identical JSON
  {
    auto t0 = Clock::now();
    std::string out;
    int rc1 = run_cli("suite --config " + kData +
                          "/suite_full.json --format json --seed 1 --out "
                          "/tmp/equicat_full_1.json",
                      out);
    int rc2 = run_cli("suite --config " + kData +
                          "/suite_full.json --format json --seed 1 --out "
                          "/tmp/equicat_full_2.json",
                      out);
    std::ifstream a("/tmp/equicat_full_1.json"), b("/tmp/equicat_full_2.json");
    std::ostringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    bool ok = rc1 == 0 && rc2 == 0 && !sa.str().empty() && sa.str() == sb.str();
    if (rc1 != 0 || rc2 != 0)
      std::printf("        full suite rc: %d %d\n%s\n", rc1, rc2, out.c_str());
    criterion(10, "byte-identical JSON reports across seeded runs", ok,
              seconds_since(t0), 1200);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
