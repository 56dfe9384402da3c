#include "equicat/spectrum.hpp"

#include <chrono>

#include "equicat/error.hpp"
#include "equicat/parallel.hpp"
#include "equicat/sphere.hpp"

namespace equicat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<PointedGSet> spheres_for(const SiteCatalog& cat, int gi) {
  std::vector<PointedGSet> out;
  for (int ri = 0; ri < cat.rep_count(gi); ++ri)
    out.push_back(sphere_gset(cat.rep(gi, ri)));
  return out;
}

int checked_sum_index(const SiteCatalog& cat, int gi, int vi, int wi) {
  int si = cat.sum_rep_index(gi, vi, wi);
  if (si < 0)
    throw Error(ErrorCode::CoverageGap,
                "spectrum: catalog lacks the sum of " + cat.rep(gi, vi).label +
                    " and " + cat.rep(gi, wi).label);
  return si;
}

}  // namespace

PairIndex spectrum_pair_index(const SiteCatalog& cat, int gi) {
  PairIndex idx;
  const int n = cat.rep_count(gi);
  idx.pos.assign(static_cast<size_t>(n) * n, -1);
  for (int vi = 0; vi < n; ++vi)
    for (int wi = 0; wi < n; ++wi) {
      if (cat.rep(gi, vi).dim + cat.rep(gi, wi).dim > cat.dim_cap) continue;
      idx.pos[vi * n + wi] = static_cast<int>(idx.pairs.size());
      idx.pairs.emplace_back(vi, wi);
    }
  return idx;
}

Spectrum sphere_spectrum(const IGSpace& sphere_base) {
  const SiteCatalog& cat = *sphere_base.cat;
  const int gi = sphere_base.gi;
  Spectrum spec;
  spec.base = &sphere_base;
  spec.name = "sphere";
  spec.idx = spectrum_pair_index(cat, gi);
  spec.sphere_at = spheres_for(cat, gi);
  spec.sigma.resize(spec.idx.pairs.size());
  for (size_t p = 0; p < spec.idx.pairs.size(); ++p) {
    auto [vi, wi] = spec.idx.pairs[p];
    checked_sum_index(cat, gi, vi, wi);
    PointedMap iso = sphere_smash_iso(cat.rep(gi, vi), cat.rep(gi, wi));
    spec.sigma[p].assign(iso.map.begin(), iso.map.end());
  }
  return spec;
}

Spectrum suspension_spectrum(const IGSpace& susp_base, const PointedSet& x0) {
  const SiteCatalog& cat = *susp_base.cat;
  const int gi = susp_base.gi;
  Spectrum spec;
  spec.base = &susp_base;
  spec.name = susp_base.name;
  spec.idx = spectrum_pair_index(cat, gi);
  spec.sphere_at = spheres_for(cat, gi);
  spec.sigma.resize(spec.idx.pairs.size());
  PointedGSet x0g = trivial_gset(cat.groups[gi], x0, "X0");
  for (size_t p = 0; p < spec.idx.pairs.size(); ++p) {
    auto [vi, wi] = spec.idx.pairs[p];
    const int si = checked_sum_index(cat, gi, vi, wi);
    const PointedGSet& av = susp_base.objects[vi];      // X0 ^ S(V)
    const PointedGSet& sv = spec.sphere_at[vi];
    const PointedGSet& sw = spec.sphere_at[wi];
    const PointedGSet& svw = spec.sphere_at[si];
    const int dv = cat.rep(gi, vi).dim, dw = cat.rep(gi, wi).dim;
    const int n = 1 + (av.size() - 1) * (sw.size() - 1);
    auto& tbl = spec.sigma[p];
    tbl.assign(n, 0);
    for (int i = 1; i < n; ++i) {
      auto [ai, ti] = smash_pair_of_index(av, sw, i);
      auto [x0i, sigi] = smash_pair_of_index(x0g, sv, ai);
      std::vector<int8_t> vec = sphere_vector(dv, sigi);
      std::vector<int8_t> tail = sphere_vector(dw, ti);
      vec.insert(vec.end(), tail.begin(), tail.end());
      tbl[i] = static_cast<int16_t>(smash_pair_index(
          x0g, svw, x0i, sphere_index(vec)));
    }
  }
  return spec;
}

Report check_spectrum(const Spectrum& spec) {
  const IGSpace& a = *spec.base;
  const SiteCatalog& cat = *a.cat;
  const int gi = a.gi;
  const GroupPtr& group = cat.groups[gi];
  const std::string prefix =
      "spectrum/" + spec.name + "@" + group->name;
  Report report;
  const int nreps = cat.rep_count(gi);

  // coverage of the component list
  for (size_t p = 0; p < spec.idx.pairs.size(); ++p) {
    auto [vi, wi] = spec.idx.pairs[p];
    const int n = 1 + (a.objects[vi].size() - 1) *
                          (spec.sphere_at[wi].size() - 1);
    if (static_cast<int>(spec.sigma[p].size()) != n)
      throw Error(ErrorCode::CoverageGap,
                  "spectrum " + spec.name + ": sigma size mismatch at (" +
                      cat.rep(gi, vi).label + "," + cat.rep(gi, wi).label + ")");
  }

  // unit: sigma against S(R^0) is the canonical identification
  {
    auto t0 = Clock::now();
    const int t0i = cat.trivial_rep_index(gi, 0);
    auto out = par::sweep(nreps, [&](long long vi) -> std::optional<std::string> {
      const int p = spec.idx.at(static_cast<int>(vi), t0i, nreps);
      const int si = cat.sum_rep_index(gi, static_cast<int>(vi), t0i);
      if (si != static_cast<int>(vi))
        return "V (+) R^0 is not V at " + cat.rep(gi, static_cast<int>(vi)).label;
      const PointedGSet& av = a.objects[vi];
      const PointedGSet& s0 = spec.sphere_at[t0i];
      for (int x = 0; x < av.size(); ++x) {
        if (x == av.basepoint) continue;
        int i = smash_pair_index(av, s0, x, 1);
        if (spec.sigma[p][i] != x)
          return "unit action differs from identification at " +
                 cat.rep(gi, static_cast<int>(vi)).label + " x=" +
                 av.elements[x];
      }
      if (spec.sigma[p][0] != av.basepoint)
        return "unit action not based at " +
               cat.rep(gi, static_cast<int>(vi)).label;
      return std::nullopt;
    });
    report.add(prefix + "/unit", out.pass, out.witness, ms_since(t0));
  }

  // associativity over all in-cap triples
  {
    auto t0 = Clock::now();
    struct Tri {
      int vi, wi, ui;
    };
    std::vector<Tri> tris;
    for (int vi = 0; vi < nreps; ++vi)
      for (int wi = 0; wi < nreps; ++wi)
        for (int ui = 0; ui < nreps; ++ui)
          if (cat.rep(gi, vi).dim + cat.rep(gi, wi).dim + cat.rep(gi, ui).dim <=
              cat.dim_cap)
            tris.push_back({vi, wi, ui});
    auto out = par::sweep(tris.size(), [&](long long i) -> std::optional<std::string> {
      const auto& [vi, wi, ui] = tris[i];
      const int vw = checked_sum_index(cat, gi, vi, wi);
      const int wu = checked_sum_index(cat, gi, wi, ui);
      const PointedGSet& av = a.objects[vi];
      const PointedGSet& avw = a.objects[vw];
      const PointedGSet& sw = spec.sphere_at[wi];
      const PointedGSet& su = spec.sphere_at[ui];
      const PointedGSet& swu = spec.sphere_at[wu];
      const int p_vw = spec.idx.at(vi, wi, nreps);
      const int p_vw_u = spec.idx.at(vw, ui, nreps);
      const int p_v_wu = spec.idx.at(vi, wu, nreps);
      const int dw = cat.rep(gi, wi).dim, du = cat.rep(gi, ui).dim;
      for (int x = 0; x < av.size(); ++x) {
        if (x == av.basepoint) continue;
        for (int t1 = 1; t1 < sw.size(); ++t1)
          for (int t2 = 1; t2 < su.size(); ++t2) {
            int step1 = spec.sigma[p_vw][smash_pair_index(av, sw, x, t1)];
            int lhs = spec.sigma[p_vw_u][smash_pair_index(avw, su, step1, t2)];
            std::vector<int8_t> vec = sphere_vector(dw, t1);
            std::vector<int8_t> tail = sphere_vector(du, t2);
            vec.insert(vec.end(), tail.begin(), tail.end());
            int rhs = spec.sigma[p_v_wu][smash_pair_index(
                av, swu, x, sphere_index(vec))];
            if (lhs != rhs)
              return "associativity fails at (" + cat.rep(gi, vi).label + "," +
                     cat.rep(gi, wi).label + "," + cat.rep(gi, ui).label +
                     ") x=" + av.elements[x] + " t1=" + sw.elements[t1] +
                     " t2=" + su.elements[t2];
          }
      }
      return std::nullopt;
    });
    report.add(prefix + "/associativity", out.pass, out.witness, ms_since(t0));
  }

  // naturality in both variables
  {
    auto t0 = Clock::now();
    auto out = par::sweep(spec.idx.pairs.size(), [&](long long p) -> std::optional<std::string> {
      auto [vi, wi] = spec.idx.pairs[p];
      const int dv = cat.rep(gi, vi).dim, dw = cat.rep(gi, wi).dim;
      const auto& perms_v = all_signed_perms(dv);
      const auto& perms_w = all_signed_perms(dw);
      const int sum_vw = checked_sum_index(cat, gi, vi, wi);
      for (int vi2 = 0; vi2 < nreps; ++vi2) {
        if (cat.rep(gi, vi2).dim != dv) continue;
        for (int wi2 = 0; wi2 < nreps; ++wi2) {
          if (cat.rep(gi, wi2).dim != dw) continue;
          const int p2 = spec.idx.at(vi2, wi2, nreps);
          const int sum_vw2 = checked_sum_index(cat, gi, vi2, wi2);
          const PointedGSet& av = a.objects[vi];
          const PointedGSet& av2 = a.objects[vi2];
          const PointedGSet& sw = spec.sphere_at[wi];
          const PointedGSet& sw2 = spec.sphere_at[wi2];
          for (size_t f = 0; f < perms_v.size(); ++f)
            for (size_t h = 0; h < perms_w.size(); ++h) {
              const int fh =
                  sp_lex_rank(sp_block_sum(perms_v[f], perms_w[h]));
              PointedMap sphere_h = sphere_map(perms_w[h]);
              for (int x = 0; x < av.size(); ++x) {
                if (x == av.basepoint) continue;
                for (int t = 1; t < sw.size(); ++t) {
                  int fx = a.map_apply(vi, vi2, static_cast<int>(f), x);
                  int ht = sphere_h(t);
                  int lhs = spec.sigma[p2][smash_pair_index(av2, sw2, fx, ht)];
                  int rhs = a.map_apply(
                      sum_vw, sum_vw2, fh,
                      spec.sigma[p][smash_pair_index(av, sw, x, t)]);
                  if (lhs != rhs)
                    return "naturality fails at (" + cat.rep(gi, vi).label +
                           "," + cat.rep(gi, wi).label + ")->(" +
                           cat.rep(gi, vi2).label + "," +
                           cat.rep(gi, wi2).label + ") f=" + std::to_string(f) +
                           " h=" + std::to_string(h);
                }
              }
            }
        }
      }
      return std::nullopt;
    });
    report.add(prefix + "/naturality", out.pass, out.witness, ms_since(t0));
  }

  // equivariance of every component
  {
    auto t0 = Clock::now();
    auto out = par::sweep(spec.idx.pairs.size(), [&](long long p) -> std::optional<std::string> {
      auto [vi, wi] = spec.idx.pairs[p];
      const int sum_vw = checked_sum_index(cat, gi, vi, wi);
      const PointedGSet& av = a.objects[vi];
      const PointedGSet& sw = spec.sphere_at[wi];
      const PointedGSet& target = a.objects[sum_vw];
      for (int g = 0; g < group->order; ++g)
        for (int x = 0; x < av.size(); ++x) {
          if (x == av.basepoint) continue;
          for (int t = 1; t < sw.size(); ++t) {
            int lhs = spec.sigma[p][smash_pair_index(av, sw, av.act(g, x),
                                                     sw.act(g, t))];
            int rhs = target.act(g, spec.sigma[p][smash_pair_index(av, sw, x, t)]);
            if (lhs != rhs)
              return "equivariance fails at (" + cat.rep(gi, vi).label + "," +
                     cat.rep(gi, wi).label + ") g=" + group->labels[g] +
                     " x=" + av.elements[x] + " t=" + sw.elements[t];
          }
        }
      return std::nullopt;
    });
    report.add(prefix + "/equivariance", out.pass, out.witness, ms_since(t0));
  }

  return report;
}

GlobalSpectrum sphere_global_spectrum(const GlobalSpace& sphere) {
  GlobalSpectrum gs;
  gs.base = &sphere;
  for (const IGSpace& comp : sphere.components)
    gs.per_group.push_back(sphere_spectrum(comp));
  return gs;
}

Report check_global_spectrum(const GlobalSpectrum& gs) {
  Report report;
  for (const Spectrum& spec : gs.per_group) report.merge(check_spectrum(spec));
  const GlobalSpace& a = *gs.base;
  const SiteCatalog& cat = *a.cat;

  auto t0 = Clock::now();
  auto out = par::sweep(cat.homs.size(), [&](long long k) -> std::optional<std::string> {
    const GroupHom& alpha = cat.homs[k];
    int tg = cat.group_index(alpha.target);
    int sg = cat.group_index(alpha.source);
    const Spectrum& st = gs.per_group[tg];
    const Spectrum& ss = gs.per_group[sg];
    const int nt = cat.rep_count(tg), ns = cat.rep_count(sg);
    for (auto [vi, wi] : st.idx.pairs) {
      const int rvi = cat.restricted_rep_index(static_cast<int>(k), vi);
      const int rwi = cat.restricted_rep_index(static_cast<int>(k), wi);
      const int sum_t = cat.sum_rep_index(tg, vi, wi);
      const auto& phi_v = a.phi[k][vi];
      const auto& phi_sum = a.phi[k][sum_t];
      const int pt = st.idx.at(vi, wi, nt);
      const int ps = ss.idx.at(rvi, rwi, ns);
      const PointedGSet& av = a.components[tg].objects[vi];
      const PointedGSet& sw = st.sphere_at[wi];
      const PointedGSet& av_r = a.components[sg].objects[rvi];
      const PointedGSet& sw_r = ss.sphere_at[rwi];
      for (int x = 0; x < av.size(); ++x) {
        if (x == av.basepoint) continue;
        for (int t = 1; t < sw.size(); ++t) {
          int lhs = phi_sum[st.sigma[pt][smash_pair_index(av, sw, x, t)]];
          int rhs = ss.sigma[ps][smash_pair_index(av_r, sw_r, phi_v[x], t)];
          if (lhs != rhs)
            return "sigma does not commute with phi at " + alpha.name + " (" +
                   cat.rep(tg, vi).label + "," + cat.rep(tg, wi).label +
                   ") x=" + av.elements[x] + " t=" + sw.elements[t];
        }
      }
    }
    return std::nullopt;
  });
  report.add("spectrum/" + a.name + "/phi-compatible", out.pass, out.witness,
             ms_since(t0));
  return report;
}

LaxMonoidal sphere_lax(const IGSpace& sphere_base) {
  const SiteCatalog& cat = *sphere_base.cat;
  const int gi = sphere_base.gi;
  LaxMonoidal lax;
  lax.base = &sphere_base;
  lax.name = "sphere";
  lax.idx = spectrum_pair_index(cat, gi);
  lax.sphere_at = spheres_for(cat, gi);
  // unit is the identity of each sphere value
  for (int ri = 0; ri < cat.rep_count(gi); ++ri) {
    const int n = lax.sphere_at[ri].size();
    std::vector<int16_t> tbl(n);
    for (int x = 0; x < n; ++x) tbl[x] = static_cast<int16_t>(x);
    lax.unit.push_back(std::move(tbl));
  }
  // multiplication is the concatenation pairing
  Spectrum s = sphere_spectrum(sphere_base);
  lax.mult = s.sigma;
  return lax;
}

Report check_lax(const LaxMonoidal& lax) {
  const IGSpace& a = *lax.base;
  const SiteCatalog& cat = *a.cat;
  const int gi = a.gi;
  const GroupPtr& group = cat.groups[gi];
  const std::string prefix = "lax/" + lax.name + "@" + group->name;
  Report report;
  const int nreps = cat.rep_count(gi);

  // unit components: based, equivariant, natural
  {
    auto t0 = Clock::now();
    auto out = par::sweep(nreps, [&](long long vi) -> std::optional<std::string> {
      const PointedGSet& sv = lax.sphere_at[vi];
      const PointedGSet& av = a.objects[vi];
      const auto& eta = lax.unit[vi];
      if (eta[sv.basepoint] != av.basepoint)
        return "unit not based at " + cat.rep(gi, static_cast<int>(vi)).label;
      for (int g = 0; g < group->order; ++g)
        for (int t = 0; t < sv.size(); ++t)
          if (eta[sv.act(g, t)] != av.act(g, eta[t]))
            return "unit not equivariant at " +
                   cat.rep(gi, static_cast<int>(vi)).label + " g=" +
                   group->labels[g];
      for (int wi = 0; wi < nreps; ++wi) {
        if (cat.rep(gi, wi).dim != cat.rep(gi, static_cast<int>(vi)).dim)
          continue;
        const auto& perms = all_signed_perms(cat.rep(gi, wi).dim);
        for (size_t f = 0; f < perms.size(); ++f) {
          PointedMap sf = sphere_map(perms[f]);
          for (int t = 0; t < sv.size(); ++t)
            if (lax.unit[wi][sf(t)] !=
                a.map_apply(static_cast<int>(vi), wi, static_cast<int>(f), eta[t]))
              return "unit not natural at " +
                     cat.rep(gi, static_cast<int>(vi)).label + "->" +
                     cat.rep(gi, wi).label + " f=" + std::to_string(f);
        }
      }
      return std::nullopt;
    });
    report.add(prefix + "/unit-coherence", out.pass, out.witness, ms_since(t0));
  }

  // multiplication: based, equivariant, natural
  {
    auto t0 = Clock::now();
    auto out = par::sweep(lax.idx.pairs.size(), [&](long long p) -> std::optional<std::string> {
      auto [vi, wi] = lax.idx.pairs[p];
      const int sum_vw = checked_sum_index(cat, gi, vi, wi);
      const PointedGSet& av = a.objects[vi];
      const PointedGSet& aw = a.objects[wi];
      const PointedGSet& target = a.objects[sum_vw];
      const auto& mu = lax.mult[p];
      if (mu[0] != target.basepoint)
        return "mult not based at (" + cat.rep(gi, vi).label + "," +
               cat.rep(gi, wi).label + ")";
      for (int g = 0; g < group->order; ++g)
        for (int x = 0; x < av.size(); ++x) {
          if (x == av.basepoint) continue;
          for (int y = 0; y < aw.size(); ++y) {
            if (y == aw.basepoint) continue;
            int lhs = mu[smash_pair_index(av, aw, av.act(g, x), aw.act(g, y))];
            int rhs = target.act(g, mu[smash_pair_index(av, aw, x, y)]);
            if (lhs != rhs)
              return "mult not equivariant at (" + cat.rep(gi, vi).label +
                     "," + cat.rep(gi, wi).label + ") g=" + group->labels[g];
          }
        }
      const int dv = cat.rep(gi, vi).dim, dw = cat.rep(gi, wi).dim;
      const auto& perms_v = all_signed_perms(dv);
      const auto& perms_w = all_signed_perms(dw);
      for (int vi2 = 0; vi2 < nreps; ++vi2) {
        if (cat.rep(gi, vi2).dim != dv) continue;
        for (int wi2 = 0; wi2 < nreps; ++wi2) {
          if (cat.rep(gi, wi2).dim != dw) continue;
          const int p2 = lax.idx.at(vi2, wi2, nreps);
          const int sum2 = checked_sum_index(cat, gi, vi2, wi2);
          const PointedGSet& av2 = a.objects[vi2];
          const PointedGSet& aw2 = a.objects[wi2];
          for (size_t f = 0; f < perms_v.size(); ++f)
            for (size_t h = 0; h < perms_w.size(); ++h) {
              const int fh = sp_lex_rank(sp_block_sum(perms_v[f], perms_w[h]));
              for (int x = 0; x < av.size(); ++x) {
                if (x == av.basepoint) continue;
                for (int y = 0; y < aw.size(); ++y) {
                  if (y == aw.basepoint) continue;
                  int fx = a.map_apply(vi, vi2, static_cast<int>(f), x);
                  int hy = a.map_apply(wi, wi2, static_cast<int>(h), y);
                  int lhs = lax.mult[p2][smash_pair_index(av2, aw2, fx, hy)];
                  int rhs = a.map_apply(sum_vw, sum2, fh,
                                        mu[smash_pair_index(av, aw, x, y)]);
                  if (lhs != rhs)
                    return "mult not natural at (" + cat.rep(gi, vi).label +
                           "," + cat.rep(gi, wi).label + ")->(" +
                           cat.rep(gi, vi2).label + "," +
                           cat.rep(gi, wi2).label + ")";
                }
              }
            }
        }
      }
      return std::nullopt;
    });
    report.add(prefix + "/mult-coherence", out.pass, out.witness, ms_since(t0));
  }

  // associativity of mu
  {
    auto t0 = Clock::now();
    struct Tri {
      int vi, wi, ui;
    };
    std::vector<Tri> tris;
    for (int vi = 0; vi < nreps; ++vi)
      for (int wi = 0; wi < nreps; ++wi)
        for (int ui = 0; ui < nreps; ++ui)
          if (cat.rep(gi, vi).dim + cat.rep(gi, wi).dim + cat.rep(gi, ui).dim <=
              cat.dim_cap)
            tris.push_back({vi, wi, ui});
    auto out = par::sweep(tris.size(), [&](long long i) -> std::optional<std::string> {
      const auto& [vi, wi, ui] = tris[i];
      const int vw = checked_sum_index(cat, gi, vi, wi);
      const int wu = checked_sum_index(cat, gi, wi, ui);
      const PointedGSet& av = a.objects[vi];
      const PointedGSet& aw = a.objects[wi];
      const PointedGSet& au = a.objects[ui];
      const PointedGSet& avw = a.objects[vw];
      const PointedGSet& awu = a.objects[wu];
      const int p_vw = lax.idx.at(vi, wi, nreps);
      const int p_wu = lax.idx.at(wi, ui, nreps);
      const int p_vw_u = lax.idx.at(vw, ui, nreps);
      const int p_v_wu = lax.idx.at(vi, wu, nreps);
      for (int x = 0; x < av.size(); ++x) {
        if (x == av.basepoint) continue;
        for (int y = 0; y < aw.size(); ++y) {
          if (y == aw.basepoint) continue;
          for (int z = 0; z < au.size(); ++z) {
            if (z == au.basepoint) continue;
            int xy = lax.mult[p_vw][smash_pair_index(av, aw, x, y)];
            int lhs = lax.mult[p_vw_u][smash_pair_index(avw, au, xy, z)];
            int yz = lax.mult[p_wu][smash_pair_index(aw, au, y, z)];
            int rhs = lax.mult[p_v_wu][smash_pair_index(av, awu, x, yz)];
            if (lhs != rhs)
              return "mult not associative at (" + cat.rep(gi, vi).label +
                     "," + cat.rep(gi, wi).label + "," +
                     cat.rep(gi, ui).label + ") x=" + av.elements[x] + " y=" +
                     aw.elements[y] + " z=" + au.elements[z];
          }
        }
      }
      return std::nullopt;
    });
    report.add(prefix + "/mult-associative", out.pass, out.witness, ms_since(t0));
  }

  // unitality on both sides through eta at R^0
  {
    auto t0 = Clock::now();
    const int t0i = cat.trivial_rep_index(gi, 0);
    const int u0 = lax.unit[t0i][1];  // image of the non-base point of S^0
    auto out = par::sweep(nreps, [&](long long vi) -> std::optional<std::string> {
      const PointedGSet& av = a.objects[vi];
      const PointedGSet& a0 = a.objects[t0i];
      const int p_right = lax.idx.at(static_cast<int>(vi), t0i, nreps);
      const int p_left = lax.idx.at(t0i, static_cast<int>(vi), nreps);
      const int sum_right = cat.sum_rep_index(gi, static_cast<int>(vi), t0i);
      const int sum_left = cat.sum_rep_index(gi, t0i, static_cast<int>(vi));
      if (sum_right != static_cast<int>(vi) || sum_left != static_cast<int>(vi))
        return "strict unit object mismatch at " +
               cat.rep(gi, static_cast<int>(vi)).label;
      if (u0 == a0.basepoint)
        return "unit image at R^0 is the basepoint";
      for (int x = 0; x < av.size(); ++x) {
        if (x == av.basepoint) continue;
        if (lax.mult[p_right][smash_pair_index(av, a0, x, u0)] != x)
          return "right unitality fails at " +
                 cat.rep(gi, static_cast<int>(vi)).label + " x=" +
                 av.elements[x];
        if (lax.mult[p_left][smash_pair_index(a0, av, u0, x)] != x)
          return "left unitality fails at " +
                 cat.rep(gi, static_cast<int>(vi)).label + " x=" +
                 av.elements[x];
      }
      return std::nullopt;
    });
    report.add(prefix + "/unitality", out.pass, out.witness, ms_since(t0));
  }

  return report;
}

std::optional<Spectrum> spectrum_from_lax(const LaxMonoidal& lax,
                                          Report& report) {
  Report lax_report = check_lax(lax);
  report.merge(lax_report);
  if (!lax_report.all_pass()) return std::nullopt;
  const IGSpace& a = *lax.base;
  const SiteCatalog& cat = *a.cat;
  const int gi = a.gi;
  Spectrum spec;
  spec.base = lax.base;
  spec.name = lax.name + ".derived";
  spec.idx = lax.idx;
  spec.sphere_at = lax.sphere_at;
  spec.sigma.resize(spec.idx.pairs.size());
  for (size_t p = 0; p < spec.idx.pairs.size(); ++p) {
    auto [vi, wi] = spec.idx.pairs[p];
    const PointedGSet& av = a.objects[vi];
    const PointedGSet& aw = a.objects[wi];
    const PointedGSet& sw = spec.sphere_at[wi];
    const int n = 1 + (av.size() - 1) * (sw.size() - 1);
    auto& tbl = spec.sigma[p];
    tbl.assign(n, 0);
    for (int i = 1; i < n; ++i) {
      auto [x, t] = smash_pair_of_index(av, sw, i);
      int y = lax.unit[wi][t];
      tbl[i] = static_cast<int16_t>(
          lax.mult[p][smash_pair_index(av, aw, x, y)]);
    }
    tbl[0] = static_cast<int16_t>(
        a.objects[checked_sum_index(cat, gi, vi, wi)].basepoint);
  }
  return spec;
}

Report check_sphere_restriction(const SiteCatalog& cat) {
  Report report;
  auto t0 = Clock::now();
  auto out = par::sweep(cat.homs.size(), [&](long long k) -> std::optional<std::string> {
    const GroupHom& alpha = cat.homs[k];
    int tg = cat.group_index(alpha.target);
    for (int vi = 0; vi < cat.rep_count(tg); ++vi) {
      const Rep& v = cat.rep(tg, vi);
      PointedGSet lhs = restrict_gset(alpha, sphere_gset(v));
      PointedGSet rhs = sphere_gset(rep_restrict(alpha, v));
      if (lhs.elements != rhs.elements || lhs.basepoint != rhs.basepoint ||
          lhs.action != rhs.action)
        return "alpha* S(V) differs from S(alpha* V) at " + alpha.name +
               " V=" + v.label;
    }
    return std::nullopt;
  });
  report.add("spectrum/sphere-restriction-identity", out.pass, out.witness,
             ms_since(t0));
  return report;
}

Report check_sphere_fixed_points(const SiteCatalog& cat) {
  Report report;
  auto t0 = Clock::now();
  struct Item {
    int gi, vi, gen;
  };
  std::vector<Item> items;
  for (int gi = 0; gi < cat.group_count(); ++gi)
    for (int vi = 0; vi < cat.rep_count(gi); ++vi)
      for (int g = 0; g < cat.groups[gi]->order; ++g)
        items.push_back({gi, vi, g});
  auto out = par::sweep(items.size(), [&](long long i) -> std::optional<std::string> {
    const auto& [gi, vi, gen] = items[i];
    const Rep& v = cat.rep(gi, vi);
    PointedGSet sv = sphere_gset(v);
    // fixed points of the cyclic subgroup = fixed points of the generator
    int fixed = 0;
    for (int x = 1; x < sv.size(); ++x)
      if (sv.act(gen, x) == x) ++fixed;
    std::vector<int> sub = cat.groups[gi]->cyclic_subgroup(gen);
    int dim_fixed = fixed_subspace_dim(v, sub);
    bool negative = sp_has_negative_cycle(v.rho[gen]);
    int expected = negative ? 0 : (1 << dim_fixed);
    if (fixed != expected)
      return "fixed-point law fails at " + cat.groups[gi]->name + "/" +
             v.label + " g=" + cat.groups[gi]->labels[gen] + ": enumerated " +
             std::to_string(fixed) + ", projector rank " +
             std::to_string(dim_fixed) + (negative ? " (negative cycle)" : "");
    return std::nullopt;
  });
  report.add("sphere-fixed-points/cross-oracle", out.pass, out.witness,
             ms_since(t0));
  return report;
}

}  // namespace equicat
