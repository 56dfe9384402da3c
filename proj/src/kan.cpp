#include "equicat/kan.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "equicat/error.hpp"
#include "equicat/functor_checks.hpp"
#include "equicat/parallel.hpp"
#include "equicat/signed_perm.hpp"

namespace equicat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Dsu {
  std::vector<int32_t> parent;

  explicit Dsu(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int32_t find(int32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smaller index as root
    parent[b] = a;
  }
};

// Quotient of B_d x X(d) by [st, x] ~ [s, t_* x]; shared by every rep of
// dimension d since the relation never mentions the group.
struct DimQuotient {
  int dim = 0;
  int m = 0;  // |X(d)|
  std::vector<std::pair<uint16_t, uint16_t>> classes;
  std::vector<int32_t> class_of;
  int base_class = 0;
};

DimQuotient build_dim_quotient(const ISpace& x, int d) {
  const HyperocTables& t = hyperoc_tables(d);
  const int oc = t.order;
  const int m = x.value_size(d);
  const int xb = x.values[d].basepoint;
  Dsu dsu(static_cast<size_t>(oc) * m);
  for (int s = 1; s < oc; ++s) dsu.unite(s * m + xb, xb);
  for (int s = 0; s < oc; ++s)
    for (int tt = 0; tt < oc; ++tt) {
      const int st = t.compose(s, tt);
      for (int e = 0; e < m; ++e)
        dsu.unite(st * m + e, s * m + x.map_apply(d, tt, e));
    }
  DimQuotient q;
  q.dim = d;
  q.m = m;
  q.class_of.assign(static_cast<size_t>(oc) * m, -1);
  for (int32_t u = 0; u < static_cast<int32_t>(oc) * m; ++u) {
    int32_t root = dsu.find(u);
    if (q.class_of[root] < 0) {
      q.class_of[root] = static_cast<int32_t>(q.classes.size());
      q.classes.emplace_back(static_cast<uint16_t>(root / m),
                             static_cast<uint16_t>(root % m));
    }
    q.class_of[u] = q.class_of[root];
  }
  q.base_class = q.class_of[xb];
  return q;
}

std::string class_label(const DimQuotient& q, const ISpace& x, int c) {
  if (c == q.base_class) return "*";
  auto [s, e] = q.classes[c];
  return "[" + all_signed_perms(q.dim)[s].to_string() + ";" +
         x.values[q.dim].elements[e] + "]";
}

}  // namespace

void validate_ispace(const ISpace& x) {
  if (static_cast<int>(x.values.size()) != x.dim_cap + 1 ||
      x.morph.size() != x.values.size())
    throw Error(ErrorCode::CoverageGap,
                "ispace " + x.name + ": data does not cover dims 0..cap");
  for (int d = 0; d <= x.dim_cap; ++d) {
    const HyperocTables& t = hyperoc_tables(d);
    const int m = x.value_size(d);
    if (m == 0 || x.values[d].basepoint < 0 || x.values[d].basepoint >= m)
      throw Error(ErrorCode::BadInput, "ispace " + x.name + ": bad basepoint");
    if (static_cast<int>(x.morph[d].size()) != t.order * m)
      throw Error(ErrorCode::CoverageGap,
                  "ispace " + x.name + ": morphism table size at dim " +
                      std::to_string(d));
    for (int f = 0; f < t.order; ++f) {
      if (x.map_apply(d, f, x.values[d].basepoint) != x.values[d].basepoint)
        throw Error(ErrorCode::ValidationFailed,
                    "ispace " + x.name + ": morphism not based at dim " +
                        std::to_string(d) + " f=" + std::to_string(f));
      for (int e = 0; e < m; ++e) {
        int v = x.map_apply(d, f, e);
        if (v < 0 || v >= m)
          throw Error(ErrorCode::BadInput,
                      "ispace " + x.name + ": image out of range");
      }
    }
    for (int e = 0; e < m; ++e)
      if (x.map_apply(d, t.identity_rank, e) != e)
        throw Error(ErrorCode::ValidationFailed,
                    "ispace " + x.name + ": identity law fails at dim " +
                        std::to_string(d));
    for (int f = 0; f < t.order; ++f)
      for (int g = 0; g < t.order; ++g) {
        const int fg = t.compose(f, g);
        for (int e = 0; e < m; ++e)
          if (x.map_apply(d, fg, e) != x.map_apply(d, f, x.map_apply(d, g, e)))
            throw Error(ErrorCode::ValidationFailed,
                        "ispace " + x.name + ": composition law fails at dim " +
                            std::to_string(d) + " (f,g)=(" + std::to_string(f) +
                            "," + std::to_string(g) + ")");
      }
  }
}

ISpace restrict_R(const GlobalSpace& a) {
  const SiteCatalog& cat = *a.cat;
  const int eg = cat.trivial_group_index();
  if (eg < 0)
    throw Error(ErrorCode::CatalogIncomplete,
                "restrict_R: catalog has no trivial group");
  ISpace x;
  x.dim_cap = cat.dim_cap;
  x.name = "R(" + a.name + ")";
  for (int d = 0; d <= cat.dim_cap; ++d) {
    int ti = cat.trivial_rep_index(eg, d);
    const PointedGSet& v = a.components[eg].objects[ti];
    x.values.push_back({v.elements, v.basepoint});
    int p = a.components[eg].pair_id(ti, ti);
    x.morph.push_back(a.components[eg].morph[p]);
  }
  return x;
}

ISpace restrict_R(const IGSpace& a) {
  const SiteCatalog& cat = *a.cat;
  ISpace x;
  x.dim_cap = cat.dim_cap;
  x.name = "R(" + a.name + ")";
  for (int d = 0; d <= cat.dim_cap; ++d) {
    int ti = cat.trivial_rep_index(a.gi, d);
    const PointedGSet& v = a.objects[ti];
    if (!v.has_trivial_action())
      throw Error(ErrorCode::NonTrivialActionOnTrivialRep,
                  "restrict_R: " + a.name + " acts nontrivially at the trivial"
                  " rep of dim " + std::to_string(d));
    x.values.push_back({v.elements, v.basepoint});
    x.morph.push_back(a.morph[a.pair_id(ti, ti)]);
  }
  return x;
}

namespace {

Extension extend_from_quotients(const ISpace& x,
                                const std::vector<DimQuotient>& quotients,
                                const SiteCatalog& cat, int gi) {
  Extension ext;
  ext.space.cat = &cat;
  ext.space.gi = gi;
  ext.space.name = "E(" + x.name + ")@" + cat.groups[gi]->name;
  ext.per_rep.resize(cat.rep_count(gi));

  const GroupPtr& group = cat.groups[gi];
  for (int vi = 0; vi < cat.rep_count(gi); ++vi) {
    const Rep& v = cat.rep(gi, vi);
    const DimQuotient& q = quotients[v.dim];
    const HyperocTables& t = hyperoc_tables(v.dim);
    KanResult kr;
    kr.vi = vi;
    kr.source_size = q.m;
    kr.classes = q.classes;
    kr.class_of = q.class_of;
    kr.base_class = q.base_class;
    const int nc = static_cast<int>(q.classes.size());
    kr.action.resize(static_cast<size_t>(group->order) * nc);
    std::vector<uint16_t> rho_rank(group->order);
    for (int g = 0; g < group->order; ++g)
      rho_rank[g] = static_cast<uint16_t>(sp_lex_rank(v.rho[g]));
    for (int g = 0; g < group->order; ++g)
      for (int c = 0; c < nc; ++c) {
        auto [s, e] = q.classes[c];
        kr.action[g * nc + c] =
            static_cast<int16_t>(q.class_of[t.compose(rho_rank[g], s) * q.m + e]);
      }
    // the diagonal action must descend to classes
    for (int g = 0; g < group->order; ++g)
      for (int s = 0; s < t.order; ++s)
        for (int e = 0; e < q.m; ++e) {
          int moved = q.class_of[t.compose(rho_rank[g], s) * q.m + e];
          if (moved != kr.action[g * nc + q.class_of[s * q.m + e]])
            throw Error(ErrorCode::BadInput,
                        "extend_E: diagonal action does not descend to classes"
                        " at " + v.label);
        }

    PointedGSet obj;
    obj.group = group;
    obj.name = "E(" + x.name + ")(" + v.label + ")";
    obj.basepoint = kr.base_class;
    for (int c = 0; c < nc; ++c) obj.elements.push_back(class_label(q, x, c));
    obj.action.assign(kr.action.begin(), kr.action.end());
    ext.space.objects.push_back(std::move(obj));
    ext.per_rep[vi] = std::move(kr);
  }

  ext.space.init_pair_layout();
  const auto& pairs = cat.same_dim_pairs(gi);
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [vi, wi] = pairs[p];
    (void)wi;
    const int d = cat.rep(gi, vi).dim;
    const DimQuotient& q = quotients[d];
    const HyperocTables& t = hyperoc_tables(d);
    const int nc = static_cast<int>(q.classes.size());
    ext.space.morph[p].resize(static_cast<size_t>(t.order) * nc);
    for (int f = 0; f < t.order; ++f)
      for (int c = 0; c < nc; ++c) {
        auto [s, e] = q.classes[c];
        ext.space.morph[p][static_cast<size_t>(f) * nc + c] =
            static_cast<int16_t>(q.class_of[t.compose(f, s) * q.m + e]);
      }
  }
  return ext;
}

}  // namespace

Extension extend_E(const ISpace& x, const SiteCatalog& cat, int gi) {
  if (x.dim_cap < cat.dim_cap)
    throw Error(ErrorCode::DimCapExceeded,
                "extend_E: functor does not cover dims up to the catalog cap");
  std::vector<DimQuotient> quotients;
  for (int d = 0; d <= cat.dim_cap; ++d)
    quotients.push_back(build_dim_quotient(x, d));
  return extend_from_quotients(x, quotients, cat, gi);
}

GlobalExtension extend_E_global(const ISpace& x, const SiteCatalog& cat) {
  if (x.dim_cap < cat.dim_cap)
    throw Error(ErrorCode::DimCapExceeded,
                "extend_E: functor does not cover dims up to the catalog cap");
  std::vector<DimQuotient> quotients;
  for (int d = 0; d <= cat.dim_cap; ++d)
    quotients.push_back(build_dim_quotient(x, d));

  GlobalExtension out;
  out.space.cat = &cat;
  out.space.name = "E(" + x.name + ")";
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    Extension ext = extend_from_quotients(x, quotients, cat, gi);
    out.space.components.push_back(std::move(ext.space));
    out.kan.push_back(std::move(ext.per_rep));
  }
  // the class list at V depends only on dim V, so phi is the identity
  out.space.phi.resize(cat.homs.size());
  for (size_t k = 0; k < cat.homs.size(); ++k) {
    int tg = cat.group_index(cat.homs[k].target);
    out.space.phi[k].resize(cat.rep_count(tg));
    for (int vi = 0; vi < cat.rep_count(tg); ++vi) {
      const int n = out.space.components[tg].objects[vi].size();
      out.space.phi[k][vi].resize(n);
      for (int e = 0; e < n; ++e)
        out.space.phi[k][vi][e] = static_cast<int16_t>(e);
    }
  }
  return out;
}

AdjunctionData build_counit(const GlobalSpace& a) {
  const SiteCatalog& cat = *a.cat;
  const int eg = cat.trivial_group_index();
  AdjunctionData data;
  data.era = extend_E_global(restrict_R(a), cat);
  data.eps.resize(cat.group_count());
  data.nu.resize(cat.group_count());
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    const int iota = cat.hom_to_trivial(gi);
    if (iota < 0)
      throw Error(ErrorCode::CatalogIncomplete,
                  "build_counit: no hom to the trivial group from " +
                      cat.groups[gi]->name);
    data.eps[gi].resize(cat.rep_count(gi));
    data.nu[gi].resize(cat.rep_count(gi));
    for (int vi = 0; vi < cat.rep_count(gi); ++vi) {
      const Rep& v = cat.rep(gi, vi);
      const int d = v.dim;
      const HyperocTables& t = hyperoc_tables(d);
      const int triv_e = cat.trivial_rep_index(eg, d);
      const int triv_g = cat.trivial_rep_index(gi, d);
      const auto& phi_iota = a.phi[iota][triv_e];
      const KanResult& kr = data.era.kan[gi][vi];
      const IGSpace& ag = a.components[gi];
      // eps[s, x] = s_* phi_iota(x)
      auto& eps = data.eps[gi][vi];
      eps.resize(kr.classes.size());
      for (size_t c = 0; c < kr.classes.size(); ++c) {
        auto [s, e] = kr.classes[c];
        eps[c] = static_cast<int16_t>(
            ag.map_apply(triv_g, vi, s, phi_iota[e]));
      }
      // nu(y) = [id, phi_iota^{-1}(i^{-1}_* y)]
      std::vector<int16_t> phi_inv(phi_iota.size());
      for (size_t e = 0; e < phi_iota.size(); ++e) phi_inv[phi_iota[e]] = static_cast<int16_t>(e);
      auto& nu = data.nu[gi][vi];
      nu.resize(ag.objects[vi].size());
      for (int y = 0; y < ag.objects[vi].size(); ++y) {
        int z = ag.map_apply(vi, triv_g, t.identity_rank, y);
        nu[y] = static_cast<int16_t>(
            kr.class_of[static_cast<size_t>(t.identity_rank) * kr.source_size +
                        phi_inv[z]]);
      }
    }
  }
  return data;
}

namespace {

Report unit_bijection_report(const ISpace& x, const GlobalExtension& ex,
                             const SiteCatalog& cat, const std::string& label) {
  Report report;
  auto t0 = Clock::now();
  const int eg = cat.trivial_group_index();
  auto out = par::sweep(cat.dim_cap + 1, [&](long long d) -> std::optional<std::string> {
    const int ti = cat.trivial_rep_index(eg, static_cast<int>(d));
    const KanResult& kr = ex.kan[eg][ti];
    const int m = x.value_size(static_cast<int>(d));
    // eta(x) = [id, x]; identity has rank 0 in the lexicographic order
    std::vector<bool> hit(kr.classes.size(), false);
    for (int e = 0; e < m; ++e) {
      int c = kr.class_of[e];
      if (hit[c])
        return "unit not injective at dim " + std::to_string(d) + " x=" +
               x.values[d].elements[e];
      hit[c] = true;
    }
    for (bool h : hit)
      if (!h) return "unit not surjective at dim " + std::to_string(d);
    if (kr.class_of[x.values[d].basepoint] != kr.base_class)
      return "unit not based at dim " + std::to_string(d);
    return std::nullopt;
  });
  report.add("adjunction/" + label + "/unit-bijective", out.pass, out.witness,
             ms_since(t0));
  return report;
}

Report counit_reports(const GlobalSpace& a, const AdjunctionData& data,
                      const std::string& label) {
  const SiteCatalog& cat = *a.cat;
  Report report;
  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.group_count(), [&](long long gi) -> std::optional<std::string> {
      for (int vi = 0; vi < cat.rep_count(static_cast<int>(gi)); ++vi) {
        const auto& eps = data.eps[gi][vi];
        const auto& nu = data.nu[gi][vi];
        for (size_t y = 0; y < nu.size(); ++y)
          if (eps[nu[y]] != static_cast<int>(y))
            return "eps(nu(y)) != y at " + cat.groups[gi]->name + "/" +
                   cat.rep(static_cast<int>(gi), vi).label + " y=" +
                   a.components[gi].objects[vi].elements[y];
        for (size_t c = 0; c < eps.size(); ++c)
          if (nu[eps[c]] != static_cast<int>(c))
            return "nu(eps(c)) != c at " + cat.groups[gi]->name + "/" +
                   cat.rep(static_cast<int>(gi), vi).label + " class=" +
                   std::to_string(c);
      }
      return std::nullopt;
    });
    report.add("adjunction/" + label + "/counit-two-sided-inverse", out.pass,
               out.witness, ms_since(t0));
  }
  // eps as a morphism of global functors: equivariance, naturality, and the
  // phi compatibility square
  GlobalMap eps_map;
  eps_map.name = label + ".eps";
  eps_map.comp = data.eps;
  Report sub = check_global_map(eps_map, data.era.space, a);
  for (CheckResult& c : sub.checks)
    c.name = "adjunction/" + label + "/eps-" +
             c.name.substr(c.name.rfind('/') + 1);
  report.merge(sub);
  return report;
}

Report triangle_reports(const GlobalSpace& a, const AdjunctionData& data,
                        const std::string& label, const std::string& prefix) {
  const SiteCatalog& cat = *a.cat;
  const int eg = cat.trivial_group_index();
  Report report;

  // R-side: R(eps_A) o eta_{RA} = id, at every dim
  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.dim_cap + 1, [&](long long d) -> std::optional<std::string> {
      const int ti = cat.trivial_rep_index(eg, static_cast<int>(d));
      const KanResult& kr = data.era.kan[eg][ti];
      const auto& eps = data.eps[eg][ti];
      const int m = kr.source_size;
      for (int e = 0; e < m; ++e)
        if (eps[kr.class_of[e]] != e)
          return "R-triangle fails at dim " + std::to_string(d) + " a=" +
                 a.components[eg].objects[ti].elements[e];
      return std::nullopt;
    });
    report.add(prefix + "/" + label + "/triangle-R", out.pass, out.witness,
               ms_since(t0));
  }

  // E-side: eps_{E X} o E(eta_X) = id with X = R A, pointwise over classes
  {
    auto t0 = Clock::now();
    AdjunctionData inner = build_counit(data.era.space);
    auto out = par::sweep(cat.group_count(), [&](long long gi) -> std::optional<std::string> {
      for (int vi = 0; vi < cat.rep_count(static_cast<int>(gi)); ++vi) {
        const int d = cat.rep(static_cast<int>(gi), vi).dim;
        const KanResult& kr = data.era.kan[gi][vi];           // E X (V)
        const KanResult& kr_e = data.era.kan[eg][cat.trivial_rep_index(eg, d)];
        const KanResult& kr2 = inner.era.kan[gi][vi];         // E(R E X)(V)
        const auto& eps2 = inner.eps[gi][vi];
        for (size_t c = 0; c < kr.classes.size(); ++c) {
          auto [s, e] = kr.classes[c];
          int b = kr_e.class_of[e];  // eta_X(e) = [id, e]
          int c2 = kr2.class_of[static_cast<size_t>(s) * kr2.source_size + b];
          if (eps2[c2] != static_cast<int>(c))
            return "E-triangle fails at " + cat.groups[gi]->name + "/" +
                   cat.rep(static_cast<int>(gi), vi).label + " class=" +
                   std::to_string(c);
        }
      }
      return std::nullopt;
    });
    report.add(prefix + "/" + label + "/triangle-E", out.pass, out.witness,
               ms_since(t0));
  }

  return report;
}

}  // namespace

Report check_adjunction(const GlobalSpace& a, const std::string& label) {
  const SiteCatalog& cat = *a.cat;
  Report report;
  AdjunctionData data = build_counit(a);
  report.merge(unit_bijection_report(restrict_R(a), data.era, cat, label));
  report.merge(counit_reports(a, data, label));
  report.merge(triangle_reports(a, data, label, "adjunction"));
  return report;
}

Report check_adjunction_ispace(const ISpace& x, const SiteCatalog& cat,
                               const std::string& label) {
  validate_ispace(x);
  Report report;
  GlobalExtension ex = extend_E_global(x, cat);
  report.merge(unit_bijection_report(x, ex, cat, label));
  AdjunctionData data = build_counit(ex.space);
  report.merge(counit_reports(ex.space, data, label));
  report.merge(triangle_reports(ex.space, data, label, "adjunction"));
  return report;
}

Report check_triangles(const GlobalSpace& a, const std::string& label) {
  AdjunctionData data = build_counit(a);
  return triangle_reports(a, data, label, "triangles");
}

Report check_triangles_ispace(const ISpace& x, const SiteCatalog& cat,
                              const std::string& label) {
  GlobalExtension ex = extend_E_global(x, cat);
  AdjunctionData data = build_counit(ex.space);
  return triangle_reports(ex.space, data, label, "triangles");
}

namespace {

// Universe of decomposition pairs for targets of one dimension: for each
// catalog pair (V1, V2) with dim V1 + dim V2 = D, a block of
// |B_D| x |A(V1)| x |B(V2)| raw triples.
struct SmashUniverse {
  struct Block {
    int v1, v2;       // rep indices
    int d1, d2;       // dims
    int ma, mb;       // value sizes
    int64_t offset;   // start in the universe
  };
  std::vector<Block> blocks;
  std::vector<int> block_of_pair;  // v1*nreps+v2 -> block id or -1
  int64_t total = 0;
  int oc = 0;  // |B_D|

  int64_t index(int blk, int s, int xa, int xb) const {
    const Block& b = blocks[blk];
    return b.offset + (static_cast<int64_t>(s) * b.ma + xa) * b.mb + xb;
  }
};

struct SmashQuotient {
  SmashUniverse uni;
  std::vector<int32_t> class_of;
  std::vector<int64_t> class_rep;  // canonical universe index per class
  struct Decoded {
    int blk, s, xa, xb;
  };
  std::vector<Decoded> decode;  // canonical representative per class
  int base_class = 0;

  Decoded decode_universe(int64_t u) const {
    int blk = 0;
    while (blk + 1 < static_cast<int>(uni.blocks.size()) &&
           uni.blocks[blk + 1].offset <= u)
      ++blk;
    const auto& b = uni.blocks[blk];
    int64_t rel = u - b.offset;
    int xb = static_cast<int>(rel % b.mb);
    int xa = static_cast<int>((rel / b.mb) % b.ma);
    int s = static_cast<int>(rel / (static_cast<int64_t>(b.ma) * b.mb));
    return {blk, s, xa, xb};
  }
};

}  // namespace

IGSpace internal_smash(const IGSpace& a, const IGSpace& b) {
  if (a.cat != b.cat || a.gi != b.gi)
    throw Error(ErrorCode::ExtentMismatch, "internal_smash: extents differ");
  const SiteCatalog& cat = *a.cat;
  const int gi = a.gi;

  // quotients shared per target dimension
  std::vector<SmashQuotient> per_dim(cat.dim_cap + 1);
  for (int dd = 0; dd <= cat.dim_cap; ++dd) {
    SmashQuotient& q = per_dim[dd];
    const HyperocTables& td = hyperoc_tables(dd);
    q.uni.oc = td.order;
    const int n = cat.rep_count(gi);
    q.uni.block_of_pair.assign(static_cast<size_t>(n) * n, -1);
    std::vector<bool> split_seen(dd + 1, false);
    for (int v1 = 0; v1 < n; ++v1)
      for (int v2 = 0; v2 < n; ++v2) {
        const int d1 = cat.rep(gi, v1).dim, d2 = cat.rep(gi, v2).dim;
        if (d1 + d2 != dd) continue;
        split_seen[d1] = true;
        SmashUniverse::Block blk;
        blk.v1 = v1;
        blk.v2 = v2;
        blk.d1 = d1;
        blk.d2 = d2;
        blk.ma = a.objects[v1].size();
        blk.mb = b.objects[v2].size();
        blk.offset = q.uni.total;
        q.uni.block_of_pair[static_cast<size_t>(v1) * n + v2] =
            static_cast<int>(q.uni.blocks.size());
        q.uni.blocks.push_back(blk);
        q.uni.total += static_cast<int64_t>(td.order) * blk.ma * blk.mb;
      }
    for (int d1 = 0; d1 <= dd; ++d1)
      if (!split_seen[d1])
        throw Error(ErrorCode::CatalogIncomplete,
                    "internal_smash: no catalog pair realizes the split (" +
                        std::to_string(d1) + "," + std::to_string(dd - d1) +
                        ") of dim " + std::to_string(dd));

    Dsu dsu(static_cast<size_t>(q.uni.total));
    // collapse everything containing a basepoint coordinate
    int64_t base_anchor = -1;
    for (const auto& blk : q.uni.blocks) {
      const int ba = a.objects[blk.v1].basepoint;
      const int bb = b.objects[blk.v2].basepoint;
      const int blk_id = q.uni.block_of_pair[static_cast<size_t>(blk.v1) *
                                                 cat.rep_count(gi) +
                                             blk.v2];
      for (int s = 0; s < td.order; ++s) {
        for (int xa = 0; xa < blk.ma; ++xa) {
          int64_t u = q.uni.index(blk_id, s, xa, bb);
          if (base_anchor < 0) base_anchor = u;
          dsu.unite(static_cast<int32_t>(base_anchor), static_cast<int32_t>(u));
        }
        for (int xb = 0; xb < blk.mb; ++xb)
          dsu.unite(static_cast<int32_t>(base_anchor),
                    static_cast<int32_t>(q.uni.index(blk_id, s, ba, xb)));
      }
    }
    // connect every block to the (trivial, trivial) block of its split
    for (int blk_id = 0; blk_id < static_cast<int>(q.uni.blocks.size()); ++blk_id) {
      const auto& blk = q.uni.blocks[blk_id];
      const int t1 = cat.trivial_rep_index(gi, blk.d1);
      const int t2 = cat.trivial_rep_index(gi, blk.d2);
      const int canon = q.uni.block_of_pair[static_cast<size_t>(t1) *
                                                cat.rep_count(gi) +
                                            t2];
      const int id1 = hyperoc_tables(blk.d1).identity_rank;
      const int id2 = hyperoc_tables(blk.d2).identity_rank;
      for (int s = 0; s < td.order; ++s)
        for (int xa = 0; xa < blk.ma; ++xa) {
          const int ya = a.map_apply(blk.v1, t1, id1, xa);
          for (int xb = 0; xb < blk.mb; ++xb) {
            const int yb = b.map_apply(blk.v2, t2, id2, xb);
            dsu.unite(static_cast<int32_t>(q.uni.index(blk_id, s, xa, xb)),
                      static_cast<int32_t>(q.uni.index(canon, s, ya, yb)));
          }
        }
    }
    // full closure within the canonical blocks
    for (int d1 = 0; d1 <= dd; ++d1) {
      const int d2 = dd - d1;
      const int t1 = cat.trivial_rep_index(gi, d1);
      const int t2 = cat.trivial_rep_index(gi, d2);
      const int canon =
          q.uni.block_of_pair[static_cast<size_t>(t1) * cat.rep_count(gi) + t2];
      const auto& blk = q.uni.blocks[canon];
      const auto& p1 = all_signed_perms(d1);
      const auto& p2 = all_signed_perms(d2);
      // rank of t1 (+) t2 inside B_D
      std::vector<int> bs_rank(p1.size() * p2.size());
      for (size_t i = 0; i < p1.size(); ++i)
        for (size_t j = 0; j < p2.size(); ++j)
          bs_rank[i * p2.size() + j] = sp_lex_rank(sp_block_sum(p1[i], p2[j]));
      for (int s = 0; s < td.order; ++s)
        for (size_t i = 0; i < p1.size(); ++i)
          for (size_t j = 0; j < p2.size(); ++j) {
            const int st = td.compose(s, bs_rank[i * p2.size() + j]);
            for (int xa = 0; xa < blk.ma; ++xa) {
              const int ya = a.map_apply(t1, t1, static_cast<int>(i), xa);
              for (int xb = 0; xb < blk.mb; ++xb) {
                const int yb = b.map_apply(t2, t2, static_cast<int>(j), xb);
                dsu.unite(static_cast<int32_t>(q.uni.index(canon, st, xa, xb)),
                          static_cast<int32_t>(q.uni.index(canon, s, ya, yb)));
              }
            }
          }
    }

    q.class_of.assign(static_cast<size_t>(q.uni.total), -1);
    for (int64_t u = 0; u < q.uni.total; ++u) {
      int32_t root = dsu.find(static_cast<int32_t>(u));
      if (q.class_of[root] < 0) {
        q.class_of[root] = static_cast<int32_t>(q.class_rep.size());
        q.class_rep.push_back(root);
      }
      q.class_of[u] = q.class_of[root];
    }
    q.base_class = q.class_of[base_anchor];
    for (int64_t rep : q.class_rep) q.decode.push_back(q.decode_universe(rep));
  }

  // assemble the functor
  IGSpace out;
  out.cat = &cat;
  out.gi = gi;
  out.name = a.name + "(^)" + b.name;
  const GroupPtr& group = cat.groups[gi];
  std::vector<std::vector<uint16_t>> rho_rank(cat.rep_count(gi));
  for (int vi = 0; vi < cat.rep_count(gi); ++vi)
    for (const SignedPerm& f : cat.rep(gi, vi).rho)
      rho_rank[vi].push_back(static_cast<uint16_t>(sp_lex_rank(f)));

  for (int vi = 0; vi < cat.rep_count(gi); ++vi) {
    const Rep& v = cat.rep(gi, vi);
    const SmashQuotient& q = per_dim[v.dim];
    const HyperocTables& td = hyperoc_tables(v.dim);
    const int nc = static_cast<int>(q.class_rep.size());
    PointedGSet obj;
    obj.group = group;
    obj.name = out.name + "(" + v.label + ")";
    obj.basepoint = q.base_class;
    // labels from canonical representatives
    for (int c = 0; c < nc; ++c) {
      if (c == q.base_class) {
        obj.elements.push_back("*");
        continue;
      }
      const auto& dec = q.decode[c];
      const auto& blk = q.uni.blocks[dec.blk];
      obj.elements.push_back(
          "[" + cat.rep(gi, blk.v1).label + "|" + cat.rep(gi, blk.v2).label +
          "|" + all_signed_perms(v.dim)[dec.s].to_string() + "|" +
          a.objects[blk.v1].elements[dec.xa] + "|" +
          b.objects[blk.v2].elements[dec.xb] + "]");
    }
    // diagonal action: g.[s, x, y] = [rho_V(g) s rho_{V1+V2}(g)^{-1}, gx, gy]
    obj.action.resize(static_cast<size_t>(group->order) * nc);
    std::vector<int16_t> act(static_cast<size_t>(group->order) * nc, -1);
    for (int g = 0; g < group->order; ++g) {
      for (int blk_id = 0; blk_id < static_cast<int>(q.uni.blocks.size());
           ++blk_id) {
        const auto& blk = q.uni.blocks[blk_id];
        const int rho_sum_inv = sp_lex_rank(sp_inverse(
            sp_block_sum(cat.rep(gi, blk.v1).rho[g], cat.rep(gi, blk.v2).rho[g])));
        for (int s = 0; s < td.order; ++s) {
          const int s2 = td.compose(td.compose(rho_rank[vi][g], s),
                                    rho_sum_inv);
          for (int xa = 0; xa < blk.ma; ++xa) {
            const int gxa = a.objects[blk.v1].act(g, xa);
            for (int xb = 0; xb < blk.mb; ++xb) {
              const int gxb = b.objects[blk.v2].act(g, xb);
              int from = q.class_of[q.uni.index(blk_id, s, xa, xb)];
              int to = q.class_of[q.uni.index(blk_id, s2, gxa, gxb)];
              if (act[static_cast<size_t>(g) * nc + from] < 0)
                act[static_cast<size_t>(g) * nc + from] = static_cast<int16_t>(to);
              else if (act[static_cast<size_t>(g) * nc + from] != to)
                throw Error(ErrorCode::BadInput,
                            "internal_smash: action does not descend to "
                            "classes at " + v.label);
            }
          }
        }
      }
      for (int c = 0; c < nc; ++c)
        obj.action[static_cast<size_t>(g) * nc + c] =
            act[static_cast<size_t>(g) * nc + c];
    }
    out.objects.push_back(std::move(obj));
  }

  out.init_pair_layout();
  const auto& pairs = cat.same_dim_pairs(gi);
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [vi, wi] = pairs[p];
    (void)wi;
    const int d = cat.rep(gi, vi).dim;
    const SmashQuotient& q = per_dim[d];
    const HyperocTables& td = hyperoc_tables(d);
    const int nc = static_cast<int>(q.class_rep.size());
    out.morph[p].resize(static_cast<size_t>(td.order) * nc);
    for (int f = 0; f < td.order; ++f)
      for (int c = 0; c < nc; ++c) {
        const auto& dec = q.decode[c];
        out.morph[p][static_cast<size_t>(f) * nc + c] = static_cast<int16_t>(
            q.class_of[q.uni.index(dec.blk, td.compose(f, dec.s), dec.xa,
                                   dec.xb)]);
      }
  }
  return out;
}

namespace {

// Enumerates based bijections at the trivial rep of one dimension that are
// consistent with the endo-morphism tables, invoking try_candidate until it
// returns true. Dimensions are independent because hom-spaces between
// different dimensions are empty.
template <class Fn>
bool search_dim_bijections(const IGSpace& a, const IGSpace& b, int ti,
                           Fn&& try_candidate) {
  const int m = a.objects[ti].size();
  const int d = a.cat->rep(a.gi, ti).dim;
  const HyperocTables& t = hyperoc_tables(d);
  const GroupPtr& group = a.cat->groups[a.gi];
  std::vector<int16_t> beta(m, -1);
  std::vector<bool> used(m, false);
  beta[a.objects[ti].basepoint] = static_cast<int16_t>(b.objects[ti].basepoint);
  used[b.objects[ti].basepoint] = true;
  std::vector<int> order;
  for (int x = 0; x < m; ++x)
    if (x != a.objects[ti].basepoint) order.push_back(x);

  auto locally_consistent = [&](int x) {
    for (int f = 0; f < t.order; ++f) {
      int ax = a.map_apply(ti, ti, f, x);
      if (beta[ax] >= 0 && b.map_apply(ti, ti, f, beta[x]) != beta[ax])
        return false;
      // also the constraints where x is the image
      for (int y = 0; y < m; ++y)
        if (beta[y] >= 0 && a.map_apply(ti, ti, f, y) == x &&
            b.map_apply(ti, ti, f, beta[y]) != beta[x])
          return false;
    }
    for (int g = 0; g < group->order; ++g) {
      int gx = a.objects[ti].act(g, x);
      if (beta[gx] >= 0 && b.objects[ti].act(g, beta[x]) != beta[gx])
        return false;
      int ginvx = a.objects[ti].act(group->inv(g), x);
      if (beta[ginvx] >= 0 && b.objects[ti].act(g, beta[ginvx]) != beta[x])
        return false;
    }
    return true;
  };

  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == order.size()) return try_candidate(beta);
    int x = order[k];
    for (int y = 0; y < m; ++y) {
      if (used[y] || y == b.objects[ti].basepoint) continue;
      beta[x] = static_cast<int16_t>(y);
      used[y] = true;
      if (locally_consistent(x) && rec(k + 1)) return true;
      used[y] = false;
      beta[x] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

std::optional<std::vector<std::vector<int16_t>>> find_natural_iso(
    const IGSpace& a, const IGSpace& b) {
  if (a.cat != b.cat || a.gi != b.gi) return std::nullopt;
  const SiteCatalog& cat = *a.cat;
  const int gi = a.gi;
  for (int ri = 0; ri < cat.rep_count(gi); ++ri)
    if (a.objects[ri].size() != b.objects[ri].size()) return std::nullopt;

  const GroupPtr& group = cat.groups[gi];
  std::vector<std::vector<int16_t>> iso(cat.rep_count(gi));

  for (int d = 0; d <= cat.dim_cap; ++d) {
    const int ti = cat.trivial_rep_index(gi, d);
    const int id_rank = hyperoc_tables(d).identity_rank;
    // reps of this dimension
    std::vector<int> dim_reps;
    for (int ri = 0; ri < cat.rep_count(gi); ++ri)
      if (cat.rep(gi, ri).dim == d) dim_reps.push_back(ri);

    auto try_candidate = [&](const std::vector<int16_t>& beta) -> bool {
      // propagate along the identity hom-space element: every A(i) is
      // invertible since i is an isomorphism
      for (int ri : dim_reps) {
        const int m = a.objects[ri].size();
        std::vector<int16_t> a_i_inv(m, -1);
        for (int x = 0; x < m; ++x) {
          int ax = a.map_apply(ti, ri, id_rank, x);
          if (a_i_inv[ax] >= 0) return false;
          a_i_inv[ax] = static_cast<int16_t>(x);
        }
        iso[ri].assign(m, 0);
        for (int x = 0; x < m; ++x)
          iso[ri][x] = static_cast<int16_t>(
              b.map_apply(ti, ri, id_rank, beta[a_i_inv[x]]));
      }
      // verify all constraints of this dimension
      for (int ri : dim_reps) {
        const int m = a.objects[ri].size();
        std::vector<bool> hit(m, false);
        for (int x = 0; x < m; ++x) {
          int y = iso[ri][x];
          if (y < 0 || y >= m || hit[y]) return false;
          hit[y] = true;
        }
        if (iso[ri][a.objects[ri].basepoint] != b.objects[ri].basepoint)
          return false;
        for (int g = 0; g < group->order; ++g)
          for (int x = 0; x < m; ++x)
            if (iso[ri][a.objects[ri].act(g, x)] !=
                b.objects[ri].act(g, iso[ri][x]))
              return false;
      }
      const int hom_count = static_cast<int>(all_signed_perms(d).size());
      for (int vi : dim_reps)
        for (int wi : dim_reps)
          for (int f = 0; f < hom_count; ++f)
            for (int x = 0; x < a.objects[vi].size(); ++x)
              if (iso[wi][a.map_apply(vi, wi, f, x)] !=
                  b.map_apply(vi, wi, f, iso[vi][x]))
                return false;
      return true;
    };

    if (!search_dim_bijections(a, b, ti, try_candidate)) return std::nullopt;
  }
  return iso;
}

}  // namespace equicat
