#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>

#include "equicat/error.hpp"
#include "equicat/functor_checks.hpp"
#include "equicat/json_io.hpp"
#include "equicat/kan.hpp"
#include "equicat/parallel.hpp"
#include "equicat/suite.hpp"

namespace {

using equicat::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw equicat::Error(equicat::ErrorCode::BadInput,
                                 "cannot write " + out_path);
  out << text;
}

int cmd_validate(const std::vector<std::string>& paths,
                 const std::string& catalog_path) {
  std::unique_ptr<equicat::SiteCatalog> cat;
  auto ensure_catalog = [&]() -> equicat::SiteCatalog& {
    if (!cat)
      throw equicat::Error(equicat::ErrorCode::BadInput,
                           "no catalog in scope; pass --catalog or list a "
                           "catalog file first");
    return *cat;
  };
  try {
    if (!catalog_path.empty())
      cat = std::make_unique<equicat::SiteCatalog>(
          equicat::parse_catalog(equicat::load_json_file(catalog_path)));
    for (const std::string& path : paths) {
      json doc = equicat::load_json_file(path);
      const std::string type = doc.value("type", "catalog");
      if (type == "catalog") {
        cat = std::make_unique<equicat::SiteCatalog>(equicat::parse_catalog(doc));
        std::cout << "ok: " << path << " (catalog '" << cat->name << "', "
                  << cat->homs.size() << " homs)\n";
      } else if (type == "ispace") {
        equicat::ISpace x = equicat::parse_ispace(doc);
        std::cout << "ok: " << path << " (ispace '" << x.name << "')\n";
      } else if (type == "igspace") {
        equicat::IGSpace a = equicat::parse_igspace(doc, ensure_catalog());
        std::cout << "ok: " << path << " (igspace '" << a.name << "')\n";
      } else if (type == "global") {
        equicat::GlobalSpace a = equicat::parse_global(doc, ensure_catalog());
        std::cout << "ok: " << path << " (global '" << a.name << "')\n";
      } else if (type == "global-map") {
        equicat::parse_global_map(doc, ensure_catalog());
        std::cout << "ok: " << path << " (global-map)\n";
      } else if (type == "lax") {
        equicat::parse_lax(doc, ensure_catalog());
        std::cout << "ok: " << path << " (lax)\n";
      } else if (type == "spectrum") {
        equicat::parse_spectrum(doc, ensure_catalog());
        std::cout << "ok: " << path << " (spectrum)\n";
      } else {
        throw equicat::Error(equicat::ErrorCode::BadInput,
                             path + ": unknown type '" + type + "'");
      }
    }
  } catch (const equicat::Error& e) {
    if (e.code() == equicat::ErrorCode::BadInput) {
      std::cerr << "input error: " << e.what() << "\n";
      return kExitInputError;
    }
    std::cerr << "validation failed [" << equicat::error_code_name(e.code())
              << "]: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

int cmd_suite(const std::string& config_path, const std::string& format,
              long long seed_override, const std::string& out_path,
              bool serial, bool timings) {
  equicat::SuiteConfig config = equicat::parse_suite_config(config_path);
  if (seed_override >= 0) config.seed = static_cast<uint64_t>(seed_override);
  equicat::par::set_parallel(!serial);
  equicat::SuiteRun run = equicat::run_suites(config);
  if (format == "json") {
    write_output(
        equicat::report_to_json(run.report, run.catalog_name, run.seed).dump(2) +
            "\n",
        out_path);
  } else {
    write_output(equicat::report_to_text(run.report, run.catalog_name, run.seed,
                                         timings),
                 out_path);
  }
  return run.report.all_pass() ? kExitOk : kExitCheckFailure;
}

int cmd_kan(const std::string& catalog_path, const std::string& functor_path,
            const std::string& group, const std::vector<std::string>& smash,
            const std::string& iso_check, const std::string& out_path,
            bool serial) {
  equicat::par::set_parallel(!serial);
  equicat::SiteCatalog cat =
      equicat::parse_catalog(equicat::load_json_file(catalog_path));
  const int gi = cat.group_index(group);
  if (gi < 0)
    throw equicat::Error(equicat::ErrorCode::BadInput,
                         "unknown group '" + group + "'");

  auto load_bundle = [&](const std::string& path) {
    json doc = equicat::load_json_file(path);
    const std::string type = doc.value("type", "");
    if (type == "igspace") return equicat::parse_igspace(doc, cat);
    throw equicat::Error(equicat::ErrorCode::BadInput,
                         path + ": expected an igspace bundle");
  };

  json result;
  std::unique_ptr<equicat::IGSpace> computed;
  if (!smash.empty()) {
    equicat::IGSpace a = load_bundle(smash[0]);
    equicat::IGSpace b = load_bundle(smash[1]);
    computed = std::make_unique<equicat::IGSpace>(equicat::internal_smash(a, b));
    result = equicat::igspace_to_json(*computed);
  } else {
    json doc = equicat::load_json_file(functor_path);
    if (doc.value("type", "") != "ispace")
      throw equicat::Error(equicat::ErrorCode::BadInput,
                           functor_path + ": expected an ispace bundle");
    equicat::ISpace x = equicat::parse_ispace(doc);
    equicat::GlobalExtension ex = equicat::extend_E_global(x, cat);
    result = equicat::extension_to_json(ex, gi, x);
    computed = std::make_unique<equicat::IGSpace>(std::move(ex.space.components[gi]));
  }

  if (!iso_check.empty()) {
    equicat::IGSpace expected = load_bundle(iso_check);
    auto iso = equicat::find_natural_iso(*computed, expected);
    json cert;
    cert["isomorphic"] = iso.has_value();
    if (iso.has_value()) {
      json tables;
      for (int ri = 0; ri < cat.rep_count(gi); ++ri)
        tables[cat.rep(gi, ri).label] = (*iso)[ri];
      cert["bijections"] = std::move(tables);
    }
    result["iso_certificate"] = std::move(cert);
  }

  write_output(result.dump(2) + "\n", out_path);
  if (result.contains("iso_certificate") &&
      !result["iso_certificate"]["isomorphic"].get<bool>())
    return kExitCheckFailure;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equicat: finite-model verification engine for equivariant "
               "functor calculus"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand(
      "validate", "parse and validate definition files");
  std::vector<std::string> validate_paths;
  std::string validate_catalog;
  validate->add_option("paths", validate_paths, "definition files")->required();
  validate->add_option("--catalog", validate_catalog,
                       "catalog context for functor bundles");

  auto* suite = app.add_subcommand("suite", "run verification suites");
  std::string config_path, format = "text", out_path;
  long long seed_override = -1;
  bool serial = false, timings = false;
  suite->add_option("--config", config_path, "suite config file")->required();
  suite->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  suite->add_option("--seed", seed_override, "override the config seed");
  suite->add_option("--out", out_path, "write the report to a file");
  suite->add_flag("--serial", serial, "run the serial reference kernels");
  suite->add_flag("--timings", timings, "include timings in text output");

  auto* kan = app.add_subcommand(
      "kan", "compute a Kan extension or an internal smash product");
  std::string kan_catalog, kan_functor, kan_group, kan_iso, kan_out;
  std::vector<std::string> kan_smash;
  bool kan_serial = false;
  kan->add_option("--catalog", kan_catalog, "catalog file")->required();
  kan->add_option("--functor", kan_functor, "ispace bundle to extend");
  kan->add_option("--group", kan_group, "target group name")->required();
  kan->add_option("--smash", kan_smash,
                  "two igspace bundles to smash internally")
      ->expected(2);
  kan->add_option("--iso-check", kan_iso,
                  "search for a natural isomorphism with this bundle and "
                  "emit the certificate");
  kan->add_option("--out", kan_out, "write the result to a file");
  kan->add_flag("--serial", kan_serial, "run the serial reference kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_paths, validate_catalog);
    if (suite->parsed())
      return cmd_suite(config_path, format, seed_override, out_path, serial,
                       timings);
    if (kan->parsed()) {
      if (kan_smash.empty() && kan_functor.empty())
        throw equicat::Error(equicat::ErrorCode::BadInput,
                             "kan: pass --functor or --smash");
      return cmd_kan(kan_catalog, kan_functor, kan_group, kan_smash, kan_iso,
                     kan_out, kan_serial);
    }
  } catch (const equicat::Error& e) {
    if (e.code() == equicat::ErrorCode::BadInput) {
      std::cerr << "input error: " << e.what() << "\n";
      return kExitInputError;
    }
    std::cerr << "error [" << equicat::error_code_name(e.code())
              << "]: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
