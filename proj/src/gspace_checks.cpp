#include "equicat/gspace_checks.hpp"

#include <chrono>

#include "equicat/parallel.hpp"

namespace equicat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Deterministic probe maps Z -> Z2: every equivariant map when the extents
// agree, then the first few based maps in enumeration order.
std::vector<PointedMap> probe_maps(const PointedGSet& z,
                                   const PointedGSet& z2) {
  std::vector<PointedMap> probes;
  if (z.group.get() == z2.group.get())
    probes = equivariant_maps(z, z2);
  MapSpace all = map_space(z, z2);
  const int extra = std::min<int>(8, all.size());
  for (int i = 0; i < extra; ++i) {
    const PointedMap& f = all.elements[i];
    bool seen = false;
    for (const PointedMap& p : probes) seen = seen || p == f;
    if (!seen) probes.push_back(f);
  }
  return probes;
}

}  // namespace

Report check_top_fibration(const SiteCatalog& cat) {
  Report report;

  struct Item {
    int k, xg, xi, zg, zi;
  };
  std::vector<Item> items;
  for (int k = 0; k < static_cast<int>(cat.homs.size()); ++k) {
    int tg = cat.group_index(cat.homs[k].target);
    for (int xi = 0; xi < static_cast<int>(cat.gsets[tg].size()); ++xi)
      for (int zg = 0; zg < cat.group_count(); ++zg)
        for (int zi = 0; zi < static_cast<int>(cat.gsets[zg].size()); ++zi)
          items.push_back({k, tg, xi, zg, zi});
  }

  {
    auto t0 = Clock::now();
    auto out = par::sweep(items.size(), [&](long long i) -> std::optional<std::string> {
      const auto& [k, xg, xi, zg, zi] = items[i];
      const GroupHom& alpha = cat.homs[k];
      const PointedGSet& x = cat.gsets[xg][xi];
      const PointedGSet& z = cat.gsets[zg][zi];
      PointedGSet rx = restrict_gset(alpha, x);
      MapSpace lhs = map_space(z, rx);
      MapSpace rhs = map_space(z, x);
      if (lhs.elements.size() != rhs.elements.size())
        return "map space sizes differ: alpha=" + alpha.name + " X=" + x.name +
               " Z=" + z.name;
      for (size_t f = 0; f < lhs.elements.size(); ++f)
        if (lhs.elements[f] != rhs.elements[f])
          return "map space element lists differ: alpha=" + alpha.name +
                 " X=" + x.name + " Z=" + z.name + " f=" + std::to_string(f);
      const int nk = z.group->order, ns = alpha.source->order;
      for (int kk = 0; kk < nk; ++kk) {
        const int kinv = z.group->inv(kk);
        for (int s = 0; s < ns; ++s) {
          const int hs = alpha(s);
          for (size_t f = 0; f < lhs.elements.size(); ++f) {
            const PointedMap& fm = lhs.elements[f];
            for (int e = 0; e < z.size(); ++e) {
              int pre = fm(z.act(kinv, e));
              if (rx.act(s, pre) != x.act(hs, pre))
                return "conjugation tables differ: alpha=" + alpha.name +
                       " X=" + x.name + " Z=" + z.name + " (k,g,f,z)=(" +
                       z.group->labels[kk] + "," + alpha.source->labels[s] +
                       "," + std::to_string(f) + "," + z.elements[e] + ")";
            }
          }
        }
      }
      return std::nullopt;
    });
    report.add("top-fibration/identity", out.pass, out.witness, ms_since(t0));
  }

  // naturality in Z: precomposition by probe maps commutes with the
  // identification (which is the identity on underlying map lists)
  {
    auto t0 = Clock::now();
    struct NatItem {
      int k, xg, xi, zg, zi, z2i;
    };
    std::vector<NatItem> nat_items;
    for (int k = 0; k < static_cast<int>(cat.homs.size()); ++k) {
      int tg = cat.group_index(cat.homs[k].target);
      for (int xi = 0; xi < static_cast<int>(cat.gsets[tg].size()); ++xi)
        for (int zg = 0; zg < cat.group_count(); ++zg)
          for (int zi = 0; zi < static_cast<int>(cat.gsets[zg].size()); ++zi)
            for (int z2i = 0; z2i < static_cast<int>(cat.gsets[zg].size()); ++z2i)
              nat_items.push_back({k, tg, xi, zg, zi, z2i});
    }
    auto out = par::sweep(nat_items.size(), [&](long long i) -> std::optional<std::string> {
      const auto& [k, xg, xi, zg, zi, z2i] = nat_items[i];
      const GroupHom& alpha = cat.homs[k];
      const PointedGSet& x = cat.gsets[xg][xi];
      const PointedGSet& z = cat.gsets[zg][zi];
      const PointedGSet& z2 = cat.gsets[zg][z2i];
      PointedGSet rx = restrict_gset(alpha, x);
      MapSpace from_lhs = map_space(z2, rx);
      MapSpace to_lhs = map_space(z, rx);
      MapSpace from_rhs = map_space(z2, x);
      MapSpace to_rhs = map_space(z, x);
      for (const PointedMap& phi : probe_maps(z, z2)) {
        for (size_t f = 0; f < from_lhs.elements.size(); ++f) {
          PointedMap pre = compose_maps(from_lhs.elements[f], phi);
          int l = to_lhs.rank_of(pre);
          int r = to_rhs.rank_of(compose_maps(from_rhs.elements[f], phi));
          if (l != r)
            return "naturality square fails: alpha=" + alpha.name +
                   " X=" + x.name + " Z=" + z.name + " Z'=" + z2.name +
                   " f=" + std::to_string(f);
        }
      }
      return std::nullopt;
    });
    report.add("top-fibration/naturality", out.pass, out.witness, ms_since(t0));
  }

  return report;
}

Report check_gspace_laws(const SiteCatalog& cat) {
  Report report;

  // X ^ S0 = X and S0 ^ X = X via the canonical pairing
  {
    auto t0 = Clock::now();
    std::vector<std::pair<int, int>> items;
    for (int gi = 0; gi < cat.group_count(); ++gi)
      for (int xi = 0; xi < static_cast<int>(cat.gsets[gi].size()); ++xi)
        items.emplace_back(gi, xi);
    auto out = par::sweep(items.size(), [&](long long i) -> std::optional<std::string> {
      auto [gi, xi] = items[i];
      const PointedGSet& x = cat.gsets[gi][xi];
      PointedGSet s0 = s0_gset(cat.groups[gi]);
      for (bool left : {false, true}) {
        PointedGSet sm = left ? smash(s0, x) : smash(x, s0);
        if (sm.size() != x.size())
          return "smash unit size mismatch at " + x.name;
        for (int g = 0; g < cat.groups[gi]->order; ++g)
          for (int idx = 0; idx < sm.size(); ++idx) {
            auto [a, b] = smash_pair_of_index(left ? s0 : x, left ? x : s0, idx);
            int xe = idx == 0 ? x.basepoint : (left ? b : a);
            auto [ga, gb] =
                smash_pair_of_index(left ? s0 : x, left ? x : s0, sm.act(g, idx));
            int gx = sm.act(g, idx) == 0 ? x.basepoint : (left ? gb : ga);
            if (gx != x.act(g, xe))
              return "smash unit iso not equivariant at " + x.name;
          }
      }
      return std::nullopt;
    });
    report.add("gspaces/smash-unit", out.pass, out.witness, ms_since(t0));
  }

  // associativity of smash via the canonical re-pairing bijection
  {
    auto t0 = Clock::now();
    struct Tri {
      int gi, a, b, c;
    };
    std::vector<Tri> tris;
    for (int gi = 0; gi < cat.group_count(); ++gi) {
      const int n = static_cast<int>(cat.gsets[gi].size());
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) tris.push_back({gi, a, b, c});
    }
    auto out = par::sweep(tris.size(), [&](long long i) -> std::optional<std::string> {
      const auto& [gi, a, b, c] = tris[i];
      const PointedGSet& x = cat.gsets[gi][a];
      const PointedGSet& y = cat.gsets[gi][b];
      const PointedGSet& z = cat.gsets[gi][c];
      PointedGSet xy = smash(x, y);
      PointedGSet lhs = smash(xy, z);
      PointedGSet yz = smash(y, z);
      PointedGSet rhs = smash(x, yz);
      if (lhs.size() != rhs.size())
        return "smash associativity size mismatch at (" + x.name + "," +
               y.name + "," + z.name + ")";
      // bijection ((x,y),z) -> (x,(y,z))
      std::vector<int> bij(lhs.size());
      bij[0] = 0;
      for (int idx = 1; idx < lhs.size(); ++idx) {
        auto [pq, zi] = smash_pair_of_index(xy, z, idx);
        auto [xi2, yi2] = smash_pair_of_index(x, y, pq);
        bij[idx] = smash_pair_index(x, yz, xi2, smash_pair_index(y, z, yi2, zi));
      }
      std::vector<bool> hit(rhs.size(), false);
      for (int v : bij) {
        if (hit[v])
          return "smash associativity pairing not bijective at (" + x.name +
                 "," + y.name + "," + z.name + ")";
        hit[v] = true;
      }
      for (int g = 0; g < cat.groups[gi]->order; ++g)
        for (int idx = 0; idx < lhs.size(); ++idx)
          if (bij[lhs.act(g, idx)] != rhs.act(g, bij[idx]))
            return "smash associativity pairing not equivariant at (" +
                   x.name + "," + y.name + "," + z.name + ") g=" +
                   cat.groups[gi]->labels[g];
      return std::nullopt;
    });
    report.add("gspaces/smash-assoc", out.pass, out.witness, ms_since(t0));
  }

  // the identity of F(X, X) is a fixed point of the diagonal action
  {
    auto t0 = Clock::now();
    std::vector<std::pair<int, int>> items;
    for (int gi = 0; gi < cat.group_count(); ++gi)
      for (int xi = 0; xi < static_cast<int>(cat.gsets[gi].size()); ++xi)
        items.emplace_back(gi, xi);
    auto out = par::sweep(items.size(), [&](long long i) -> std::optional<std::string> {
      auto [gi, xi] = items[i];
      const PointedGSet& x = cat.gsets[gi][xi];
      MapSpace ms = map_space(x, x);
      int id_rank = ms.rank_of(identity_map(x.size()));
      for (int g = 0; g < cat.groups[gi]->order; ++g)
        if (ms.action(g, g, id_rank) != id_rank)
          return "identity map moved by conjugation at " + x.name +
                 " g=" + cat.groups[gi]->labels[g];
      return std::nullopt;
    });
    report.add("gspaces/identities-fixed", out.pass, out.witness, ms_since(t0));
  }

  // composition F(Y,Z) x F(X,Y) -> F(X,Z) is equivariant
  {
    auto t0 = Clock::now();
    // flatten the gset list and materialize every map space once
    std::vector<std::pair<int, int>> gs;
    for (int gg = 0; gg < cat.group_count(); ++gg)
      for (int si = 0; si < static_cast<int>(cat.gsets[gg].size()); ++si)
        gs.emplace_back(gg, si);
    const int ngs = static_cast<int>(gs.size());
    std::vector<MapSpace> spaces(static_cast<size_t>(ngs) * ngs);
    for (int a = 0; a < ngs; ++a)
      for (int b = 0; b < ngs; ++b)
        spaces[a * ngs + b] = map_space(cat.gsets[gs[a].first][gs[a].second],
                                        cat.gsets[gs[b].first][gs[b].second]);
    struct Item {
      int xs, ys, zs, g, h, k;
    };
    std::vector<Item> items;
    for (int xs = 0; xs < ngs; ++xs)
      for (int ys = 0; ys < ngs; ++ys)
        for (int zs = 0; zs < ngs; ++zs)
          for (int g = 0; g < cat.groups[gs[xs].first]->order; ++g)
            for (int h = 0; h < cat.groups[gs[ys].first]->order; ++h)
              for (int k = 0; k < cat.groups[gs[zs].first]->order; ++k)
                items.push_back({xs, ys, zs, g, h, k});
    auto out = par::sweep(items.size(), [&](long long i) -> std::optional<std::string> {
      const auto& it = items[i];
      const PointedGSet& x = cat.gsets[gs[it.xs].first][gs[it.xs].second];
      const PointedGSet& y = cat.gsets[gs[it.ys].first][gs[it.ys].second];
      const PointedGSet& z = cat.gsets[gs[it.zs].first][gs[it.zs].second];
      const MapSpace& fxy = spaces[it.xs * ngs + it.ys];
      const MapSpace& fyz = spaces[it.ys * ngs + it.zs];
      const int ginv = x.group->inv(it.g);
      const int hinv = y.group->inv(it.h);
      // (g,h).phi and (h,k).psi materialized once
      std::vector<std::vector<int>> phic(fxy.size());
      for (int p = 0; p < fxy.size(); ++p) {
        phic[p].resize(x.size());
        for (int e = 0; e < x.size(); ++e)
          phic[p][e] = y.act(it.h, fxy.elements[p](x.act(ginv, e)));
      }
      std::vector<std::vector<int>> psic(fyz.size());
      for (int p = 0; p < fyz.size(); ++p) {
        psic[p].resize(y.size());
        for (int e = 0; e < y.size(); ++e)
          psic[p][e] = z.act(it.k, fyz.elements[p](y.act(hinv, e)));
      }
      for (int ps = 0; ps < fyz.size(); ++ps)
        for (int ph = 0; ph < fxy.size(); ++ph)
          for (int e = 0; e < x.size(); ++e) {
            int lhs = psic[ps][phic[ph][e]];
            int rhs = z.act(it.k, fyz.elements[ps](fxy.elements[ph](x.act(ginv, e))));
            if (lhs != rhs)
              return "composition not equivariant: (" + x.name + "," + y.name +
                     "," + z.name + ") (g,h,k)=(" + x.group->labels[it.g] +
                     "," + y.group->labels[it.h] + "," + z.group->labels[it.k] +
                     ") psi=" + std::to_string(ps) + " phi=" + std::to_string(ph);
          }
      return std::nullopt;
    });
    report.add("gspaces/composition-equivariant", out.pass, out.witness,
               ms_since(t0));
  }

  return report;
}

}  // namespace equicat
