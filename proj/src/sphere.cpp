#include "equicat/sphere.hpp"

#include "equicat/error.hpp"

namespace equicat {

namespace {

std::string sign_label(const std::vector<int8_t>& v) {
  if (v.empty()) return ".";
  std::string s;
  for (int8_t b : v) s += b < 0 ? '-' : '+';
  return s;
}

}  // namespace

int sphere_index(const std::vector<int8_t>& sign_vec) {
  int mask = 0;
  for (int8_t b : sign_vec) mask = (mask << 1) | (b < 0 ? 1 : 0);
  return 1 + mask;
}

std::vector<int8_t> sphere_vector(int dim, int index) {
  int mask = index - 1;
  std::vector<int8_t> v(dim);
  for (int i = 0; i < dim; ++i)
    v[i] = (mask >> (dim - 1 - i)) & 1 ? -1 : 1;
  return v;
}

PointedGSet sphere_gset(const Rep& v) {
  PointedGSet s;
  s.group = v.group;
  s.name = "S(" + v.label + ")";
  s.basepoint = 0;
  s.elements.push_back("*");
  const int count = 1 << v.dim;
  for (int m = 0; m < count; ++m)
    s.elements.push_back(sign_label(sphere_vector(v.dim, m + 1)));
  const int n = s.size();
  s.action.resize(v.group->order * n);
  for (int g = 0; g < v.group->order; ++g) {
    s.action[g * n] = 0;
    for (int m = 1; m < n; ++m)
      s.action[g * n + m] = sphere_index(sp_apply(v.rho[g], sphere_vector(v.dim, m)));
  }
  return s;
}

PointedMap sphere_map(const SignedPerm& f) {
  PointedMap out;
  const int n = 1 + (1 << f.dim());
  out.map.resize(n);
  out.map[0] = 0;
  for (int m = 1; m < n; ++m)
    out.map[m] = sphere_index(sp_apply(f, sphere_vector(f.dim(), m)));
  return out;
}

PointedMap sphere_smash_iso(const Rep& v, const Rep& w) {
  if (v.group.get() != w.group.get())
    throw Error(ErrorCode::ExtentMismatch, "sphere_smash_iso: extents differ");
  PointedGSet sv = sphere_gset(v);
  PointedGSet sw = sphere_gset(w);
  const int n = 1 + (sv.size() - 1) * (sw.size() - 1);
  PointedMap out;
  out.map.resize(n);
  out.map[0] = 0;
  for (int i = 1; i < n; ++i) {
    auto [xi, ti] = smash_pair_of_index(sv, sw, i);
    std::vector<int8_t> vec = sphere_vector(v.dim, xi);
    std::vector<int8_t> tail = sphere_vector(w.dim, ti);
    vec.insert(vec.end(), tail.begin(), tail.end());
    out.map[i] = sphere_index(vec);
  }
  return out;
}

IGSpace sphere_igspace(const SiteCatalog& cat, int gi) {
  IGSpace a;
  a.cat = &cat;
  a.gi = gi;
  a.name = "sphere";
  for (int ri = 0; ri < cat.rep_count(gi); ++ri)
    a.objects.push_back(sphere_gset(cat.rep(gi, ri)));
  a.init_pair_layout();
  // tables depend only on the dimension
  std::vector<std::vector<int16_t>> per_dim(cat.dim_cap + 1);
  for (int d = 0; d <= cat.dim_cap; ++d) {
    const auto& perms = all_signed_perms(d);
    const int sz = 1 + (1 << d);
    per_dim[d].resize(perms.size() * sz);
    for (size_t f = 0; f < perms.size(); ++f) {
      PointedMap m = sphere_map(perms[f]);
      for (int x = 0; x < sz; ++x)
        per_dim[d][f * sz + x] = static_cast<int16_t>(m(x));
    }
  }
  const auto& pairs = cat.same_dim_pairs(gi);
  for (size_t p = 0; p < pairs.size(); ++p)
    a.morph[p] = per_dim[cat.rep(gi, pairs[p].first).dim];
  return a;
}

namespace {

std::vector<std::vector<int16_t>> identity_phi(const SiteCatalog& cat,
                                               const std::vector<IGSpace>& comps,
                                               int hom_idx) {
  const GroupHom& alpha = cat.homs[hom_idx];
  int tg = cat.group_index(alpha.target);
  std::vector<std::vector<int16_t>> out(cat.rep_count(tg));
  for (int vi = 0; vi < cat.rep_count(tg); ++vi) {
    const int n = comps[tg].objects[vi].size();
    out[vi].resize(n);
    for (int x = 0; x < n; ++x) out[vi][x] = static_cast<int16_t>(x);
  }
  return out;
}

GlobalSpace assemble_identity_phi(const SiteCatalog& cat,
                                  std::vector<IGSpace> comps,
                                  std::string name) {
  GlobalSpace a;
  a.cat = &cat;
  a.name = std::move(name);
  a.components = std::move(comps);
  a.phi.resize(cat.homs.size());
  for (size_t k = 0; k < cat.homs.size(); ++k)
    a.phi[k] = identity_phi(cat, a.components, static_cast<int>(k));
  return a;
}

}  // namespace

GlobalSpace sphere_global(const SiteCatalog& cat) {
  std::vector<IGSpace> comps;
  for (int gi = 0; gi < cat.group_count(); ++gi)
    comps.push_back(sphere_igspace(cat, gi));
  return assemble_identity_phi(cat, std::move(comps), "sphere");
}

IGSpace constant_igspace(const SiteCatalog& cat, int gi,
                         const PointedSet& value) {
  IGSpace a;
  a.cat = &cat;
  a.gi = gi;
  a.name = "const" + std::to_string(value.size());
  for (int ri = 0; ri < cat.rep_count(gi); ++ri)
    a.objects.push_back(
        trivial_gset(cat.groups[gi], value, a.name));
  a.init_pair_layout();
  const auto& pairs = cat.same_dim_pairs(gi);
  for (size_t p = 0; p < pairs.size(); ++p) {
    const int d = cat.rep(gi, pairs[p].first).dim;
    const int hom_count = static_cast<int>(all_signed_perms(d).size());
    a.morph[p].resize(static_cast<size_t>(hom_count) * value.size());
    for (int f = 0; f < hom_count; ++f)
      for (int x = 0; x < value.size(); ++x)
        a.morph[p][static_cast<size_t>(f) * value.size() + x] =
            static_cast<int16_t>(x);
  }
  return a;
}

GlobalSpace constant_global(const SiteCatalog& cat, const PointedSet& value) {
  std::vector<IGSpace> comps;
  for (int gi = 0; gi < cat.group_count(); ++gi)
    comps.push_back(constant_igspace(cat, gi, value));
  return assemble_identity_phi(cat, std::move(comps),
                               "const" + std::to_string(value.size()));
}

IGSpace suspension_igspace(const SiteCatalog& cat, int gi,
                           const PointedSet& x0) {
  IGSpace a;
  a.cat = &cat;
  a.gi = gi;
  a.name = "susp" + std::to_string(x0.size());
  PointedGSet base = trivial_gset(cat.groups[gi], x0, "X0");
  for (int ri = 0; ri < cat.rep_count(gi); ++ri)
    a.objects.push_back(smash(base, sphere_gset(cat.rep(gi, ri))));
  a.init_pair_layout();
  const auto& pairs = cat.same_dim_pairs(gi);
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [vi, wi] = pairs[p];
    const int d = cat.rep(gi, vi).dim;
    const auto& perms = all_signed_perms(d);
    const PointedGSet& sv = sphere_gset(cat.rep(gi, vi));
    const PointedGSet& sw = sphere_gset(cat.rep(gi, wi));
    const int sz = a.objects[vi].size();
    a.morph[p].resize(perms.size() * sz);
    PointedMap idx0 = identity_map(base.size());
    for (size_t f = 0; f < perms.size(); ++f) {
      PointedMap m = smash_of_maps(base, sv, base, sw, idx0, sphere_map(perms[f]));
      for (int x = 0; x < sz; ++x)
        a.morph[p][f * sz + x] = static_cast<int16_t>(m(x));
    }
  }
  return a;
}

GlobalSpace suspension_global(const SiteCatalog& cat, const PointedSet& x0) {
  std::vector<IGSpace> comps;
  for (int gi = 0; gi < cat.group_count(); ++gi)
    comps.push_back(suspension_igspace(cat, gi, x0));
  return assemble_identity_phi(cat, std::move(comps),
                               "susp" + std::to_string(x0.size()));
}

IGSpace unit_igspace(const SiteCatalog& cat, int gi) {
  IGSpace a;
  a.cat = &cat;
  a.gi = gi;
  a.name = "unit";
  for (int ri = 0; ri < cat.rep_count(gi); ++ri) {
    if (cat.rep(gi, ri).dim == 0)
      a.objects.push_back(sphere_gset(cat.rep(gi, ri)));
    else
      a.objects.push_back(one_point_gset(cat.groups[gi]));
  }
  a.init_pair_layout();
  const auto& pairs = cat.same_dim_pairs(gi);
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [vi, wi] = pairs[p];
    (void)wi;
    const int d = cat.rep(gi, vi).dim;
    const int hom_count = static_cast<int>(all_signed_perms(d).size());
    const int sz = a.objects[vi].size();
    a.morph[p].resize(static_cast<size_t>(hom_count) * sz);
    for (int f = 0; f < hom_count; ++f)
      for (int x = 0; x < sz; ++x)
        a.morph[p][static_cast<size_t>(f) * sz + x] = static_cast<int16_t>(x);
  }
  return a;
}

PointedSet pointed_set_of_size(int n) {
  PointedSet s;
  s.basepoint = 0;
  s.elements.push_back("*");
  for (int i = 1; i < n; ++i) s.elements.push_back("x" + std::to_string(i));
  return s;
}

PointedGSet trivial_gset(const GroupPtr& g, const PointedSet& s,
                         const std::string& name) {
  std::vector<int> action(static_cast<size_t>(g->order) * s.size());
  for (int a = 0; a < g->order; ++a)
    for (int x = 0; x < s.size(); ++x) action[a * s.size() + x] = x;
  return make_pointed_gset(g, s.elements, s.basepoint, std::move(action), name);
}

}  // namespace equicat
