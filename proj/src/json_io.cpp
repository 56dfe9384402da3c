#include "equicat/json_io.hpp"

#include <fstream>
#include <sstream>

#include "equicat/error.hpp"
#include "equicat/sphere.hpp"

namespace equicat {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::BadInput, where + ": " + what);
}

const json& need(const json& doc, const std::string& key,
                 const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) bad(where, "missing field '" + key + "'");
  return *it;
}

SignedPerm parse_signed_perm(const json& doc, int dim,
                             const std::string& where) {
  const json& perm = need(doc, "perm", where);
  const json& signs = need(doc, "signs", where);
  if (!perm.is_array() || static_cast<int>(perm.size()) != dim ||
      !signs.is_array() || static_cast<int>(signs.size()) != dim)
    bad(where, "perm/signs must be arrays of length dim");
  SignedPerm f(dim);
  std::vector<bool> seen(dim, false);
  for (int i = 0; i < dim; ++i) {
    int p = perm[i].get<int>();
    int s = signs[i].get<int>();
    if (p < 0 || p >= dim || seen[p]) bad(where, "perm is not a bijection");
    if (s != 1 && s != -1) bad(where, "signs must be +1 or -1");
    seen[p] = true;
    f.perm[i] = static_cast<int8_t>(p);
    f.signs[i] = static_cast<int8_t>(s);
  }
  return f;
}

json signed_perm_to_json(const SignedPerm& f) {
  json out;
  out["perm"] = json::array();
  out["signs"] = json::array();
  for (int i = 0; i < f.dim(); ++i) {
    out["perm"].push_back(static_cast<int>(f.perm[i]));
    out["signs"].push_back(static_cast<int>(f.signs[i]));
  }
  return out;
}

PointedGSet parse_gset_body(const json& doc, const GroupPtr& group,
                            const std::string& name, const std::string& where) {
  const json& elements = need(doc, "elements", where);
  const json& action = need(doc, "action", where);
  std::vector<std::string> labels;
  for (const json& e : elements) labels.push_back(e.get<std::string>());
  int basepoint = need(doc, "basepoint", where).get<int>();
  std::vector<int> table;
  if (!action.is_array() || static_cast<int>(action.size()) != group->order)
    bad(where, "action must have one row per group element");
  for (const json& row : action) {
    if (!row.is_array() || row.size() != labels.size())
      bad(where, "action row size mismatch");
    for (const json& v : row) table.push_back(v.get<int>());
  }
  return make_pointed_gset(group, std::move(labels), basepoint,
                           std::move(table), name);
}

json gset_body_to_json(const PointedGSet& s) {
  json out;
  out["elements"] = s.elements;
  out["basepoint"] = s.basepoint;
  json rows = json::array();
  for (int g = 0; g < s.group->order; ++g) {
    json row = json::array();
    for (int x = 0; x < s.size(); ++x) row.push_back(s.act(g, x));
    rows.push_back(std::move(row));
  }
  out["action"] = std::move(rows);
  return out;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad(path, "cannot open file");
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    bad(path, std::string("JSON parse error: ") + e.what());
  }
  return doc;
}

SiteCatalog parse_catalog(const json& doc) {
  const std::string where = "catalog";
  CatalogSpec spec;
  spec.name = doc.value("name", "catalog");
  spec.dim_cap = need(doc, "dim_cap", where).get<int>();
  // the hyperoctahedral multiplication tables are materialized per dim;
  // beyond 4 they stop fitting in memory
  if (spec.dim_cap < 1 || spec.dim_cap > 4)
    bad(where, "dim_cap out of supported range [1,4]");

  for (const json& gdoc : need(doc, "groups", where)) {
    std::string gname = need(gdoc, "name", where + "/groups").get<std::string>();
    const json& table = need(gdoc, "table", where + "/groups/" + gname);
    std::vector<std::vector<int>> rows;
    for (const json& row : table) rows.push_back(row.get<std::vector<int>>());
    std::vector<std::string> labels;
    if (gdoc.contains("elements"))
      labels = gdoc["elements"].get<std::vector<std::string>>();
    spec.groups.push_back(group_from_table(rows, gname, std::move(labels)));
  }
  auto find_group = [&](const std::string& n, const std::string& w) {
    for (const GroupPtr& g : spec.groups)
      if (g->name == n) return g;
    bad(w, "unknown group '" + n + "'");
  };

  const json& homs = need(doc, "homs", where);
  if (homs.is_string()) {
    if (homs.get<std::string>() != "all")
      bad(where, "homs must be \"all\" or an array");
  } else {
    std::vector<GroupHom> list;
    for (const json& hdoc : homs) {
      std::string hname = need(hdoc, "name", where + "/homs").get<std::string>();
      GroupPtr src = find_group(
          need(hdoc, "source", where + "/homs/" + hname).get<std::string>(),
          where + "/homs/" + hname);
      GroupPtr tgt = find_group(
          need(hdoc, "target", where + "/homs/" + hname).get<std::string>(),
          where + "/homs/" + hname);
      std::vector<int> image =
          need(hdoc, "image", where + "/homs/" + hname).get<std::vector<int>>();
      list.push_back(make_hom(src, tgt, std::move(image), hname));
    }
    spec.homs = std::move(list);
  }

  if (doc.contains("reps")) {
    for (const json& rdoc : doc["reps"]) {
      std::string label = need(rdoc, "label", where + "/reps").get<std::string>();
      const std::string rwhere = where + "/reps/" + label;
      GroupPtr g = find_group(need(rdoc, "group", rwhere).get<std::string>(),
                              rwhere);
      int dim = need(rdoc, "dim", rwhere).get<int>();
      const json& rho = need(rdoc, "rho", rwhere);
      std::vector<SignedPerm> maps(g->order, sp_identity(dim));
      std::vector<bool> seen(g->order, false);
      for (auto it = rho.begin(); it != rho.end(); ++it) {
        int idx = -1;
        for (int e = 0; e < g->order; ++e)
          if (g->labels[e] == it.key()) idx = e;
        if (idx < 0) bad(rwhere, "unknown element label '" + it.key() + "'");
        maps[idx] = parse_signed_perm(it.value(), dim, rwhere);
        seen[idx] = true;
      }
      for (int e = 0; e < g->order; ++e)
        if (!seen[e]) bad(rwhere, "missing rho for element " + g->labels[e]);
      spec.seed_reps.push_back(make_rep(g, dim, std::move(maps), label));
    }
  }
  spec.close_reps = doc.value("close_reps", true);

  if (doc.contains("gsets")) {
    for (const json& sdoc : doc["gsets"]) {
      std::string sname = need(sdoc, "name", where + "/gsets").get<std::string>();
      GroupPtr g = find_group(
          need(sdoc, "group", where + "/gsets/" + sname).get<std::string>(),
          where + "/gsets/" + sname);
      spec.gsets.push_back(
          parse_gset_body(sdoc, g, sname, where + "/gsets/" + sname));
    }
  }

  return build_catalog(spec);
}

json catalog_to_json(const SiteCatalog& cat) {
  json out;
  out["type"] = "catalog";
  out["name"] = cat.name;
  out["dim_cap"] = cat.dim_cap;
  out["groups"] = json::array();
  for (const GroupPtr& g : cat.groups) {
    json gdoc;
    gdoc["name"] = g->name;
    gdoc["elements"] = g->labels;
    json rows = json::array();
    for (int a = 0; a < g->order; ++a) {
      json row = json::array();
      for (int b = 0; b < g->order; ++b) row.push_back(g->mul(a, b));
      rows.push_back(std::move(row));
    }
    gdoc["table"] = std::move(rows);
    out["groups"].push_back(std::move(gdoc));
  }
  out["homs"] = json::array();
  for (const GroupHom& h : cat.homs) {
    json hdoc;
    hdoc["name"] = h.name;
    hdoc["source"] = h.source->name;
    hdoc["target"] = h.target->name;
    hdoc["image"] = h.image;
    out["homs"].push_back(std::move(hdoc));
  }
  out["reps"] = json::array();
  for (int gi = 0; gi < cat.group_count(); ++gi)
    for (int ri = 0; ri < cat.rep_count(gi); ++ri) {
      const Rep& v = cat.rep(gi, ri);
      json rdoc;
      rdoc["group"] = v.group->name;
      rdoc["label"] = v.label;
      rdoc["dim"] = v.dim;
      json rho;
      for (int e = 0; e < v.group->order; ++e)
        rho[v.group->labels[e]] = signed_perm_to_json(v.rho[e]);
      rdoc["rho"] = std::move(rho);
      out["reps"].push_back(std::move(rdoc));
    }
  out["gsets"] = json::array();
  for (int gi = 0; gi < cat.group_count(); ++gi)
    for (const PointedGSet& s : cat.gsets[gi]) {
      json sdoc = gset_body_to_json(s);
      sdoc["group"] = s.group->name;
      sdoc["name"] = s.name;
      out["gsets"].push_back(std::move(sdoc));
    }
  return out;
}

ISpace parse_ispace(const json& doc) {
  const std::string where = "ispace";
  ISpace x;
  x.name = doc.value("name", "ispace");
  x.dim_cap = need(doc, "dim_cap", where).get<int>();
  const json& values = need(doc, "values", where);
  const json& morphisms = need(doc, "morphisms", where);
  if (static_cast<int>(values.size()) != x.dim_cap + 1 ||
      static_cast<int>(morphisms.size()) != x.dim_cap + 1)
    bad(where, "values/morphisms must cover dims 0..dim_cap");
  for (int d = 0; d <= x.dim_cap; ++d) {
    PointedSet val;
    val.elements = need(values[d], "elements", where).get<std::vector<std::string>>();
    val.basepoint = need(values[d], "basepoint", where).get<int>();
    const int m = val.size();
    const int oc = static_cast<int>(all_signed_perms(d).size());
    const json& rows = morphisms[d];
    if (!rows.is_array() || static_cast<int>(rows.size()) != oc)
      bad(where, "morphisms[" + std::to_string(d) + "] must have " +
                     std::to_string(oc) + " rows");
    std::vector<int16_t> tbl;
    for (const json& row : rows) {
      if (static_cast<int>(row.size()) != m)
        bad(where, "morphism row size mismatch at dim " + std::to_string(d));
      for (const json& v : row) tbl.push_back(static_cast<int16_t>(v.get<int>()));
    }
    x.values.push_back(std::move(val));
    x.morph.push_back(std::move(tbl));
  }
  validate_ispace(x);
  return x;
}

json ispace_to_json(const ISpace& x) {
  json out;
  out["type"] = "ispace";
  out["name"] = x.name;
  out["dim_cap"] = x.dim_cap;
  out["values"] = json::array();
  out["morphisms"] = json::array();
  for (int d = 0; d <= x.dim_cap; ++d) {
    json v;
    v["elements"] = x.values[d].elements;
    v["basepoint"] = x.values[d].basepoint;
    out["values"].push_back(std::move(v));
    const int oc = static_cast<int>(all_signed_perms(d).size());
    json rows = json::array();
    for (int f = 0; f < oc; ++f) {
      json row = json::array();
      for (int e = 0; e < x.value_size(d); ++e) row.push_back(x.map_apply(d, f, e));
      rows.push_back(std::move(row));
    }
    out["morphisms"].push_back(std::move(rows));
  }
  return out;
}

namespace {

void parse_igspace_body(IGSpace& a, const json& doc, const SiteCatalog& cat,
                        const std::string& where) {
  const json& objects = need(doc, "objects", where);
  a.objects.resize(cat.rep_count(a.gi));
  std::vector<bool> have(cat.rep_count(a.gi), false);
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    int ri = cat.rep_index_by_label(a.gi, it.key());
    if (ri < 0) bad(where, "unknown rep label '" + it.key() + "'");
    a.objects[ri] = parse_gset_body(it.value(), cat.groups[a.gi],
                                    a.name + "(" + it.key() + ")",
                                    where + "/objects/" + it.key());
    have[ri] = true;
  }
  for (int ri = 0; ri < cat.rep_count(a.gi); ++ri)
    if (!have[ri])
      throw Error(ErrorCode::CoverageGap,
                  where + ": missing object at rep " + cat.rep(a.gi, ri).label);

  a.init_pair_layout();
  const json& morphisms = need(doc, "morphisms", where);
  const auto& pairs = cat.same_dim_pairs(a.gi);
  std::vector<bool> have_pair(pairs.size(), false);
  for (auto it = morphisms.begin(); it != morphisms.end(); ++it) {
    const std::string key = it.key();
    auto sep = key.find('|');
    if (sep == std::string::npos) bad(where, "morphism key must be 'V|W'");
    int vi = cat.rep_index_by_label(a.gi, key.substr(0, sep));
    int wi = cat.rep_index_by_label(a.gi, key.substr(sep + 1));
    if (vi < 0 || wi < 0) bad(where, "unknown rep in morphism key '" + key + "'");
    int p = a.pair_id(vi, wi);
    if (p < 0) bad(where, "reps in key '" + key + "' have different dims");
    const int oc = static_cast<int>(all_signed_perms(cat.rep(a.gi, vi).dim).size());
    const int m = a.objects[vi].size();
    const json& rows = it.value();
    if (!rows.is_array() || static_cast<int>(rows.size()) != oc)
      bad(where, "morphism table at '" + key + "' must have " +
                     std::to_string(oc) + " rows");
    std::vector<int16_t> tbl;
    for (const json& row : rows) {
      if (static_cast<int>(row.size()) != m)
        bad(where, "morphism row size mismatch at '" + key + "'");
      for (const json& v : row) tbl.push_back(static_cast<int16_t>(v.get<int>()));
    }
    a.morph[p] = std::move(tbl);
    have_pair[p] = true;
  }
  for (size_t p = 0; p < pairs.size(); ++p)
    if (!have_pair[p])
      throw Error(ErrorCode::CoverageGap,
                  where + ": missing morphism table at (" +
                      cat.rep(a.gi, pairs[p].first).label + "," +
                      cat.rep(a.gi, pairs[p].second).label + ")");
}

}  // namespace

IGSpace parse_igspace(const json& doc, const SiteCatalog& cat) {
  const std::string where = "igspace";
  IGSpace a;
  a.cat = &cat;
  std::string gname = need(doc, "group", where).get<std::string>();
  a.gi = cat.group_index(gname);
  if (a.gi < 0) bad(where, "unknown group '" + gname + "'");
  a.name = doc.value("name", "igspace");
  parse_igspace_body(a, doc, cat, where);
  return a;
}

json igspace_to_json(const IGSpace& a) {
  const SiteCatalog& cat = *a.cat;
  json out;
  out["type"] = "igspace";
  out["group"] = cat.groups[a.gi]->name;
  out["name"] = a.name;
  json objects;
  for (int ri = 0; ri < cat.rep_count(a.gi); ++ri)
    objects[cat.rep(a.gi, ri).label] = gset_body_to_json(a.objects[ri]);
  out["objects"] = std::move(objects);
  json morphisms;
  const auto& pairs = cat.same_dim_pairs(a.gi);
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [vi, wi] = pairs[p];
    const int oc = static_cast<int>(all_signed_perms(cat.rep(a.gi, vi).dim).size());
    const int m = a.objects[vi].size();
    json rows = json::array();
    for (int f = 0; f < oc; ++f) {
      json row = json::array();
      for (int x = 0; x < m; ++x) row.push_back(a.map_apply(vi, wi, f, x));
      rows.push_back(std::move(row));
    }
    morphisms[cat.rep(a.gi, vi).label + "|" + cat.rep(a.gi, wi).label] =
        std::move(rows);
  }
  out["morphisms"] = std::move(morphisms);
  return out;
}

GlobalSpace parse_global(const json& doc, const SiteCatalog& cat) {
  const std::string where = "global";
  GlobalSpace a;
  a.cat = &cat;
  a.name = doc.value("name", "global");
  const json& components = need(doc, "components", where);
  a.components.resize(cat.group_count());
  std::vector<bool> have(cat.group_count(), false);
  for (auto it = components.begin(); it != components.end(); ++it) {
    int gi = cat.group_index(it.key());
    if (gi < 0) bad(where, "unknown group '" + it.key() + "'");
    IGSpace comp;
    comp.cat = &cat;
    comp.gi = gi;
    comp.name = a.name + "@" + it.key();
    parse_igspace_body(comp, it.value(), cat, where + "/components/" + it.key());
    a.components[gi] = std::move(comp);
    have[gi] = true;
  }
  for (int gi = 0; gi < cat.group_count(); ++gi)
    if (!have[gi])
      throw Error(ErrorCode::CoverageGap,
                  where + ": missing component for group " +
                      cat.groups[gi]->name);

  const json& phi = need(doc, "phi", where);
  a.phi.resize(cat.homs.size());
  for (size_t k = 0; k < cat.homs.size(); ++k) {
    int tg = cat.group_index(cat.homs[k].target);
    int sg = cat.group_index(cat.homs[k].source);
    auto it = phi.find(cat.homs[k].name);
    if (it == phi.end())
      throw Error(ErrorCode::CoverageGap,
                  where + ": missing phi for hom " + cat.homs[k].name);
    a.phi[k].resize(cat.rep_count(tg));
    std::vector<bool> have_rep(cat.rep_count(tg), false);
    for (auto rit = it->begin(); rit != it->end(); ++rit) {
      int vi = cat.rep_index_by_label(tg, rit.key());
      if (vi < 0) bad(where, "unknown rep '" + rit.key() + "' in phi");
      int rvi = cat.restricted_rep_index(static_cast<int>(k), vi);
      const int upper = a.components[sg].objects[rvi].size();
      std::vector<int16_t> tbl;
      for (const json& v : rit.value()) {
        int e = v.get<int>();
        if (e < 0 || e >= upper)
          bad(where, "phi entry out of range at " + cat.homs[k].name + "/" +
                         rit.key());
        tbl.push_back(static_cast<int16_t>(e));
      }
      if (static_cast<int>(tbl.size()) != a.components[tg].objects[vi].size())
        bad(where, "phi table size mismatch at " + cat.homs[k].name + "/" +
                       rit.key());
      a.phi[k][vi] = std::move(tbl);
      have_rep[vi] = true;
    }
    for (int vi = 0; vi < cat.rep_count(tg); ++vi)
      if (!have_rep[vi])
        throw Error(ErrorCode::CoverageGap,
                    where + ": missing phi component at " + cat.homs[k].name +
                        "/" + cat.rep(tg, vi).label);
  }
  return a;
}

std::shared_ptr<GlobalSpace> builtin_global(const std::string& name,
                                            const SiteCatalog& cat) {
  if (name == "sphere")
    return std::make_shared<GlobalSpace>(sphere_global(cat));
  if (name.rfind("const", 0) == 0) {
    int n = std::stoi(name.substr(5));
    return std::make_shared<GlobalSpace>(
        constant_global(cat, pointed_set_of_size(n)));
  }
  if (name.rfind("susp", 0) == 0) {
    int n = std::stoi(name.substr(4));
    return std::make_shared<GlobalSpace>(
        suspension_global(cat, pointed_set_of_size(n)));
  }
  bad("builtin", "unknown builtin functor '" + name + "'");
}

LoadedGlobalMap parse_global_map(const json& doc, const SiteCatalog& cat) {
  const std::string where = "global-map";
  LoadedGlobalMap out;
  const json& src = need(doc, "source", where);
  const json& tgt = need(doc, "target", where);
  out.source = src.is_string()
                   ? builtin_global(src.get<std::string>(), cat)
                   : std::make_shared<GlobalSpace>(parse_global(src, cat));
  out.target = tgt.is_string()
                   ? builtin_global(tgt.get<std::string>(), cat)
                   : std::make_shared<GlobalSpace>(parse_global(tgt, cat));
  out.map.name = doc.value("name", "map");
  const json& components = need(doc, "components", where);
  out.map.comp.resize(cat.group_count());
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    auto it = components.find(cat.groups[gi]->name);
    if (it == components.end())
      throw Error(ErrorCode::CoverageGap,
                  where + ": missing components for " + cat.groups[gi]->name);
    out.map.comp[gi].resize(cat.rep_count(gi));
    std::vector<bool> have(cat.rep_count(gi), false);
    for (auto rit = it->begin(); rit != it->end(); ++rit) {
      int vi = cat.rep_index_by_label(gi, rit.key());
      if (vi < 0) bad(where, "unknown rep '" + rit.key() + "'");
      const int upper = out.target->components[gi].objects[vi].size();
      std::vector<int16_t> tbl;
      for (const json& v : rit.value()) {
        int e = v.get<int>();
        if (e < 0 || e >= upper)
          bad(where, "component entry out of range at " + rit.key());
        tbl.push_back(static_cast<int16_t>(e));
      }
      if (static_cast<int>(tbl.size()) !=
          out.source->components[gi].objects[vi].size())
        bad(where, "component size mismatch at " + rit.key());
      out.map.comp[gi][vi] = std::move(tbl);
      have[vi] = true;
    }
    for (int vi = 0; vi < cat.rep_count(gi); ++vi)
      if (!have[vi])
        throw Error(ErrorCode::CoverageGap,
                    where + ": missing component at " + cat.groups[gi]->name +
                        "/" + cat.rep(gi, vi).label);
  }
  return out;
}

namespace {

std::shared_ptr<IGSpace> base_igspace_of(const json& doc,
                                         const SiteCatalog& cat,
                                         const std::string& where) {
  const json& base = need(doc, "base", where);
  std::string gname = need(doc, "group", where).get<std::string>();
  int gi = cat.group_index(gname);
  if (gi < 0) bad(where, "unknown group '" + gname + "'");
  if (base.is_string()) {
    const std::string name = base.get<std::string>();
    if (name == "sphere")
      return std::make_shared<IGSpace>(sphere_igspace(cat, gi));
    if (name == "unit")
      return std::make_shared<IGSpace>(unit_igspace(cat, gi));
    if (name.rfind("const", 0) == 0)
      return std::make_shared<IGSpace>(
          constant_igspace(cat, gi, pointed_set_of_size(std::stoi(name.substr(5)))));
    if (name.rfind("susp", 0) == 0)
      return std::make_shared<IGSpace>(suspension_igspace(
          cat, gi, pointed_set_of_size(std::stoi(name.substr(4)))));
    bad(where, "unknown builtin base '" + name + "'");
  }
  return std::make_shared<IGSpace>(parse_igspace(base, cat));
}

// tables keyed "V|W" covering every in-cap pair; shape(p) yields the
// expected (domain size, codomain size) of the table at pair p
template <class ShapeFn>
std::vector<std::vector<int16_t>> parse_pair_tables(
    const json& doc, const SiteCatalog& cat, int gi, const PairIndex& idx,
    const std::string& where, ShapeFn&& shape) {
  std::vector<std::vector<int16_t>> out(idx.pairs.size());
  std::vector<bool> have(idx.pairs.size(), false);
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string key = it.key();
    auto sep = key.find('|');
    if (sep == std::string::npos) bad(where, "pair key must be 'V|W'");
    int vi = cat.rep_index_by_label(gi, key.substr(0, sep));
    int wi = cat.rep_index_by_label(gi, key.substr(sep + 1));
    if (vi < 0 || wi < 0) bad(where, "unknown rep in key '" + key + "'");
    int p = idx.at(vi, wi, cat.rep_count(gi));
    if (p < 0) bad(where, "pair '" + key + "' exceeds the dim cap");
    auto [domain, codomain] = shape(p);
    std::vector<int16_t> tbl;
    for (const json& v : it.value()) {
      int e = v.get<int>();
      if (e < 0 || e >= codomain)
        bad(where, "entry out of range in table '" + key + "'");
      tbl.push_back(static_cast<int16_t>(e));
    }
    if (static_cast<int>(tbl.size()) != domain)
      bad(where, "table size mismatch at '" + key + "'");
    out[p] = std::move(tbl);
    have[p] = true;
  }
  for (size_t p = 0; p < idx.pairs.size(); ++p)
    if (!have[p])
      throw Error(ErrorCode::CoverageGap,
                  where + ": missing table at pair (" +
                      cat.rep(gi, idx.pairs[p].first).label + "," +
                      cat.rep(gi, idx.pairs[p].second).label + ")");
  return out;
}

}  // namespace

LoadedLax parse_lax(const json& doc, const SiteCatalog& cat) {
  const std::string where = "lax";
  LoadedLax out;
  out.base = base_igspace_of(doc, cat, where);
  const int gi = out.base->gi;
  out.lax.base = out.base.get();
  out.lax.name = doc.value("name", "lax");
  out.lax.idx = spectrum_pair_index(cat, gi);
  for (int ri = 0; ri < cat.rep_count(gi); ++ri)
    out.lax.sphere_at.push_back(sphere_gset(cat.rep(gi, ri)));
  const json& unit = need(doc, "unit", where);
  out.lax.unit.resize(cat.rep_count(gi));
  std::vector<bool> have(cat.rep_count(gi), false);
  for (auto it = unit.begin(); it != unit.end(); ++it) {
    int vi = cat.rep_index_by_label(gi, it.key());
    if (vi < 0) bad(where, "unknown rep '" + it.key() + "' in unit");
    const int upper = out.base->objects[vi].size();
    std::vector<int16_t> tbl;
    for (const json& v : it.value()) {
      int e = v.get<int>();
      if (e < 0 || e >= upper)
        bad(where, "unit entry out of range at " + it.key());
      tbl.push_back(static_cast<int16_t>(e));
    }
    if (static_cast<int>(tbl.size()) != out.lax.sphere_at[vi].size())
      bad(where, "unit table size mismatch at " + it.key());
    out.lax.unit[vi] = std::move(tbl);
    have[vi] = true;
  }
  for (int vi = 0; vi < cat.rep_count(gi); ++vi)
    if (!have[vi])
      throw Error(ErrorCode::CoverageGap,
                  where + ": missing unit at " + cat.rep(gi, vi).label);
  out.lax.mult = parse_pair_tables(
      need(doc, "mult", where), cat, gi, out.lax.idx, where, [&](int p) {
        auto [vi, wi] = out.lax.idx.pairs[p];
        int si = cat.sum_rep_index(gi, vi, wi);
        int domain = 1 + (out.base->objects[vi].size() - 1) *
                             (out.base->objects[wi].size() - 1);
        return std::make_pair(domain, out.base->objects[si].size());
      });
  return out;
}

LoadedSpectrum parse_spectrum(const json& doc, const SiteCatalog& cat) {
  const std::string where = "spectrum";
  LoadedSpectrum out;
  out.base = base_igspace_of(doc, cat, where);
  const int gi = out.base->gi;
  out.spec.base = out.base.get();
  out.spec.name = doc.value("name", "spectrum");
  out.spec.idx = spectrum_pair_index(cat, gi);
  for (int ri = 0; ri < cat.rep_count(gi); ++ri)
    out.spec.sphere_at.push_back(sphere_gset(cat.rep(gi, ri)));
  out.spec.sigma = parse_pair_tables(
      need(doc, "sigma", where), cat, gi, out.spec.idx, where, [&](int p) {
        auto [vi, wi] = out.spec.idx.pairs[p];
        int si = cat.sum_rep_index(gi, vi, wi);
        int domain = 1 + (out.base->objects[vi].size() - 1) *
                             (out.spec.sphere_at[wi].size() - 1);
        return std::make_pair(domain, out.base->objects[si].size());
      });
  return out;
}

json extension_to_json(const GlobalExtension& ex, int gi, const ISpace& source) {
  const SiteCatalog& cat = *ex.space.cat;
  json out;
  out["type"] = "kan-extension";
  out["functor"] = source.name;
  out["group"] = cat.groups[gi]->name;
  json reps;
  for (int vi = 0; vi < cat.rep_count(gi); ++vi) {
    const KanResult& kr = ex.kan[gi][vi];
    const int d = cat.rep(gi, vi).dim;
    json rdoc;
    rdoc["basepoint_class"] = kr.base_class;
    json classes = json::array();
    for (auto [s, e] : kr.classes) {
      json c;
      c["s"] = signed_perm_to_json(all_signed_perms(d)[s]);
      c["x"] = source.values[d].elements[e];
      classes.push_back(std::move(c));
    }
    rdoc["classes"] = std::move(classes);
    json action;
    const int nc = static_cast<int>(kr.classes.size());
    for (int g = 0; g < cat.groups[gi]->order; ++g) {
      json row = json::array();
      for (int c = 0; c < nc; ++c) row.push_back(kr.action[g * nc + c]);
      action[cat.groups[gi]->labels[g]] = std::move(row);
    }
    rdoc["action"] = std::move(action);
    reps[cat.rep(gi, vi).label] = std::move(rdoc);
  }
  out["reps"] = std::move(reps);
  return out;
}

json report_to_json(const Report& report, const std::string& catalog_name,
                    uint64_t seed) {
  json out;
  out["engine"] = "equicat";
  out["catalog"] = catalog_name;
  out["seed"] = seed;
  json checks = json::array();
  int passed = 0;
  for (const CheckResult& c : report.checks) {
    json cdoc;
    cdoc["name"] = c.name;
    cdoc["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) cdoc["witness"] = c.witness;
    if (c.pass) ++passed;
    checks.push_back(std::move(cdoc));
  }
  out["checks"] = std::move(checks);
  out["summary"] = {{"total", report.checks.size()},
                    {"passed", passed},
                    {"failed", report.checks.size() - passed}};
  return out;
}

std::string report_to_text(const Report& report,
                           const std::string& catalog_name, uint64_t seed,
                           bool with_timing) {
  std::ostringstream os;
  os << "catalog: " << catalog_name << "  seed: " << seed << "\n";
  for (const CheckResult& c : report.checks) {
    os << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
    if (with_timing) {
      os.precision(1);
      os << std::fixed << "  (" << c.millis << " ms)";
    }
    os << "\n";
    if (!c.pass) os << "       witness: " << c.witness << "\n";
  }
  int failed = report.failed_count();
  os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
     << " (" << report.checks.size() << " total)\n";
  return os.str();
}

}  // namespace equicat
