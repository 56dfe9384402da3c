#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "equicat/json_io.hpp"
#include "equicat/kan.hpp"
#include "equicat/sphere.hpp"
#include "equicat/suite.hpp"

using namespace equicat;

namespace {

const std::string kData = EQUICAT_DATA_DIR;
const std::string kCli = EQUICAT_CLI_PATH;

int run_cli(const std::string& args) {
  std::string cmd = kCli + " " + args + " > /tmp/equicat_test_out.txt 2>&1";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("the shipped catalog file reproduces the programmatic catalog") {
  SiteCatalog loaded = parse_catalog(load_json_file(kData + "/catalog.json"));
  SiteCatalog built = standard_catalog();
  REQUIRE(loaded.group_count() == built.group_count());
  for (int gi = 0; gi < built.group_count(); ++gi) {
    CHECK(loaded.groups[gi]->name == built.groups[gi]->name);
    CHECK(loaded.groups[gi]->table == built.groups[gi]->table);
    CHECK(loaded.groups[gi]->labels == built.groups[gi]->labels);
    REQUIRE(loaded.rep_count(gi) == built.rep_count(gi));
    for (int ri = 0; ri < built.rep_count(gi); ++ri) {
      CHECK(loaded.rep(gi, ri).label == built.rep(gi, ri).label);
      CHECK(loaded.rep(gi, ri).dim == built.rep(gi, ri).dim);
      CHECK(loaded.rep(gi, ri).rho == built.rep(gi, ri).rho);
    }
    REQUIRE(loaded.gsets[gi].size() == built.gsets[gi].size());
    for (size_t si = 0; si < built.gsets[gi].size(); ++si) {
      CHECK(loaded.gsets[gi][si].elements == built.gsets[gi][si].elements);
      CHECK(loaded.gsets[gi][si].action == built.gsets[gi][si].action);
    }
  }
  REQUIRE(loaded.homs.size() == built.homs.size());
  for (size_t k = 0; k < built.homs.size(); ++k) {
    CHECK(loaded.homs[k].name == built.homs[k].name);
    CHECK(loaded.homs[k].image == built.homs[k].image);
  }
}

TEST_CASE("catalog and functor serialization round-trips") {
  SiteCatalog cat = parse_catalog(load_json_file(kData + "/mini_catalog.json"));
  json doc = catalog_to_json(cat);
  SiteCatalog again = parse_catalog(doc);
  CHECK(again.rep_count(1) == cat.rep_count(1));
  CHECK(again.homs.size() == cat.homs.size());

  IGSpace sphere = sphere_igspace(cat, 1);
  json sdoc = igspace_to_json(sphere);
  IGSpace back = parse_igspace(sdoc, cat);
  CHECK(back.objects == sphere.objects);
  CHECK(back.morph == sphere.morph);

  ISpace x = restrict_R(sphere_global(cat));
  json xdoc = ispace_to_json(x);
  ISpace xback = parse_ispace(xdoc);
  CHECK(xback.values.size() == x.values.size());
  CHECK(xback.morph == x.morph);
}

TEST_CASE("schema violations carry a path and throw BadInput") {
  json doc = load_json_file(kData + "/mini_catalog.json");
  doc["reps"][0].erase("rho");
  CHECK_THROWS_WITH_AS(parse_catalog(doc), doctest::Contains("rho"), Error);
  json bad = doc;
  bad.erase("dim_cap");
  CHECK_THROWS_WITH_AS(parse_catalog(bad), doctest::Contains("dim_cap"), Error);
}

TEST_CASE("cli: validate accepts the shipped data and orders exit codes") {
  CHECK(run_cli("validate " + kData + "/catalog.json") == 0);
  CHECK(run_cli("validate " + kData + "/mini_catalog.json " + kData +
                "/examples/sphere_c2.json") == 0);
  // semantic validation failure: broken rho
  CHECK(run_cli("validate " + kData + "/faults/broken_rho_catalog.json") == 1);
  std::string out = slurp("/tmp/equicat_test_out.txt");
  CHECK(out.find("rho") != std::string::npos);
  // parse error
  std::ofstream bad("/tmp/equicat_bad.json");
  bad << "{ not json";
  bad.close();
  CHECK(run_cli("validate /tmp/equicat_bad.json") == 2);
  // missing file
  CHECK(run_cli("validate /tmp/equicat_does_not_exist.json") == 2);
}

TEST_CASE("cli: suite runs, reports failures, and is byte-deterministic") {
  const std::string config = kData + "/faults/corrupted_morphism_config.json";
  CHECK(run_cli("suite --config " + config + " --format json") == 1);
  std::string report = slurp("/tmp/equicat_test_out.txt");
  CHECK(report.find("\"fail\"") != std::string::npos);
  CHECK(report.find("witness") != std::string::npos);

  // empty suite list, no fixtures: zero checks, exit 0
  std::ofstream empty("/tmp/equicat_empty_config.json");
  empty << "{\"catalog\": \"" << kData << "/mini_catalog.json\", \"suites\": []}";
  empty.close();
  CHECK(run_cli("suite --config /tmp/equicat_empty_config.json --format json") == 0);
  json rep = json::parse(slurp("/tmp/equicat_test_out.txt"));
  CHECK(rep["summary"]["total"].get<int>() == 0);

  // unknown suite name is an input error
  std::ofstream unknown("/tmp/equicat_unknown_config.json");
  unknown << "{\"catalog\": \"" << kData
          << "/mini_catalog.json\", \"suites\": [\"nope\"]}";
  unknown.close();
  CHECK(run_cli("suite --config /tmp/equicat_unknown_config.json") == 2);

  // determinism on a quick subset, twice with the same seed
  std::ofstream quick("/tmp/equicat_quick_config.json");
  quick << "{\"catalog\": \"" << kData
        << "/mini_catalog.json\", \"suites\": [\"site-axioms\", "
           "\"adjunction\"], \"seed\": 7, \"instance_count\": 5}";
  quick.close();
  CHECK(run_cli("suite --config /tmp/equicat_quick_config.json --format json "
                "--out /tmp/equicat_r1.json") == 0);
  CHECK(run_cli("suite --config /tmp/equicat_quick_config.json --format json "
                "--out /tmp/equicat_r2.json") == 0);
  CHECK(slurp("/tmp/equicat_r1.json") == slurp("/tmp/equicat_r2.json"));
  CHECK(!slurp("/tmp/equicat_r1.json").empty());

  // serial reference path produces the same bytes
  CHECK(run_cli("suite --config /tmp/equicat_quick_config.json --format json "
                "--serial --out /tmp/equicat_r3.json") == 0);
  CHECK(slurp("/tmp/equicat_r1.json") == slurp("/tmp/equicat_r3.json"));
}

TEST_CASE("cli: kan extends a functor and certifies the smash unit") {
  const std::string mini = kData + "/mini_catalog.json";
  CHECK(run_cli("kan --catalog " + mini + " --functor " + kData +
                "/examples/sphere_restriction.json --group C2 --out "
                "/tmp/equicat_kan.json") == 0);
  json kan = json::parse(slurp("/tmp/equicat_kan.json"));
  CHECK(kan["type"] == "kan-extension");
  // two non-base classes at the sign rep, swapped by g1
  json sign = kan["reps"]["sign"];
  CHECK(sign["classes"].size() == 3);
  CHECK(sign["action"]["g1"] == json::array({0, 2, 1}));

  // smash with the unit: certificate says isomorphic
  CHECK(run_cli("kan --catalog " + mini + " --smash " + kData +
                "/examples/sphere_c2.json " + kData +
                "/examples/unit_c2.json --group C2 --iso-check " + kData +
                "/examples/sphere_c2.json --out /tmp/equicat_smash.json") == 0);
  json smash = json::parse(slurp("/tmp/equicat_smash.json"));
  CHECK(smash["iso_certificate"]["isomorphic"] == true);

  // smash of the sphere with itself is not isomorphic to the sphere
  CHECK(run_cli("kan --catalog " + mini + " --smash " + kData +
                "/examples/sphere_c2.json " + kData +
                "/examples/sphere_c2.json --group C2 --iso-check " + kData +
                "/examples/sphere_c2.json --out /tmp/equicat_smash2.json") == 1);
  json smash2 = json::parse(slurp("/tmp/equicat_smash2.json"));
  CHECK(smash2["iso_certificate"]["isomorphic"] == false);
}

TEST_CASE("report text and json formats agree on outcomes") {
  SuiteConfig config;
  config.catalog_path = kData + "/mini_catalog.json";
  config.suites = {"grothendieck"};
  SuiteRun run = run_suites(config);
  CHECK(run.report.all_pass());
  json doc = report_to_json(run.report, run.catalog_name, run.seed);
  CHECK(doc["summary"]["failed"].get<int>() == 0);
  for (const json& c : doc["checks"]) CHECK(!c.contains("witness"));
  std::string text = report_to_text(run.report, run.catalog_name, run.seed, false);
  CHECK(text.find("[pass]") != std::string::npos);
  CHECK(text.find("all checks passed") != std::string::npos);
}
