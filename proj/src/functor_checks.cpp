#include "equicat/functor_checks.hpp"

#include <chrono>
#include <map>

#include "equicat/error.hpp"
#include "equicat/parallel.hpp"
#include "equicat/signed_perm.hpp"

namespace equicat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_coverage(const IGSpace& a) {
  const SiteCatalog& cat = *a.cat;
  if (static_cast<int>(a.objects.size()) != cat.rep_count(a.gi))
    throw Error(ErrorCode::CoverageGap,
                "igspace " + a.name + ": object data does not cover the catalog");
  const auto& pairs = cat.same_dim_pairs(a.gi);
  if (a.morph.size() != pairs.size())
    throw Error(ErrorCode::CoverageGap,
                "igspace " + a.name + ": morphism data does not cover the catalog");
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [vi, wi] = pairs[p];
    const size_t hom_count = all_signed_perms(cat.rep(a.gi, vi).dim).size();
    if (a.morph[p].size() != hom_count * a.objects[vi].size())
      throw Error(ErrorCode::CoverageGap,
                  "igspace " + a.name + ": missing morphism data at pair (" +
                      cat.rep(a.gi, vi).label + "," + cat.rep(a.gi, wi).label +
                      ")");
    for (int16_t v : a.morph[p])
      if (v < 0 || v >= a.objects[wi].size())
        throw Error(ErrorCode::CoverageGap,
                    "igspace " + a.name + ": morphism image out of range");
  }
}

// Content identity of morphism tables, for collapsing composition triples
// that verify the same numeric fact.
std::vector<int> table_ids(const IGSpace& a) {
  std::vector<int> ids(a.morph.size());
  std::map<std::pair<size_t, const std::vector<int16_t>*>, int,
           decltype([](const auto& x, const auto& y) {
             if (x.first != y.first) return x.first < y.first;
             return *x.second < *y.second;
           })>
      seen;
  for (size_t p = 0; p < a.morph.size(); ++p) {
    auto key = std::make_pair(a.morph[p].size(), &a.morph[p]);
    auto it = seen.find(key);
    if (it == seen.end()) it = seen.emplace(key, static_cast<int>(p)).first;
    ids[p] = it->second;
  }
  return ids;
}

}  // namespace

Report check_igspace(const IGSpace& a) {
  require_coverage(a);
  const SiteCatalog& cat = *a.cat;
  const GroupPtr& group = cat.groups[a.gi];
  const std::string prefix = "functor/" + a.name + "@" + group->name;
  Report report;
  const auto& pairs = cat.same_dim_pairs(a.gi);

  // identities to identities
  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.rep_count(a.gi), [&](long long vi) -> std::optional<std::string> {
      const int d = cat.rep(a.gi, static_cast<int>(vi)).dim;
      const int id_rank = hyperoc_tables(d).identity_rank;
      for (int x = 0; x < a.objects[vi].size(); ++x)
        if (a.map_apply(static_cast<int>(vi), static_cast<int>(vi), id_rank, x) != x)
          return "identity morphism not sent to identity at V=" +
                 cat.rep(a.gi, static_cast<int>(vi)).label + " x=" +
                 a.objects[vi].elements[x];
      return std::nullopt;
    });
    report.add(prefix + "/identity", out.pass, out.witness, ms_since(t0));
  }

  // based maps
  {
    auto t0 = Clock::now();
    auto out = par::sweep(pairs.size(), [&](long long p) -> std::optional<std::string> {
      auto [vi, wi] = pairs[p];
      const int d = cat.rep(a.gi, vi).dim;
      const int hom_count = static_cast<int>(all_signed_perms(d).size());
      for (int f = 0; f < hom_count; ++f)
        if (a.map_apply(vi, wi, f, a.objects[vi].basepoint) !=
            a.objects[wi].basepoint)
          return "morphism image is not based at (" + cat.rep(a.gi, vi).label +
                 "," + cat.rep(a.gi, wi).label + ") f=" + std::to_string(f);
      return std::nullopt;
    });
    report.add(prefix + "/based", out.pass, out.witness, ms_since(t0));
  }

  // composition, with content-identical triples checked once
  {
    auto t0 = Clock::now();
    std::vector<int> tid = table_ids(a);
    struct Job {
      int vi, wi, ui;
    };
    std::vector<Job> jobs;
    {
      std::map<std::tuple<int, int, int, int>, bool> seen;
      const int n = cat.rep_count(a.gi);
      for (int vi = 0; vi < n; ++vi)
        for (int wi = 0; wi < n; ++wi) {
          int pvw = a.pair_id(vi, wi);
          if (pvw < 0) continue;
          for (int ui = 0; ui < n; ++ui) {
            int pwu = a.pair_id(wi, ui);
            if (pwu < 0) continue;
            int pvu = a.pair_id(vi, ui);
            auto key = std::make_tuple(cat.rep(a.gi, vi).dim, tid[pvw],
                                       tid[pwu], tid[pvu]);
            if (!seen.emplace(key, true).second) continue;
            jobs.push_back({vi, wi, ui});
          }
        }
    }
    auto out = par::sweep(jobs.size(), [&](long long j) -> std::optional<std::string> {
      const auto& [vi, wi, ui] = jobs[j];
      const int d = cat.rep(a.gi, vi).dim;
      const HyperocTables& t = hyperoc_tables(d);
      for (int f = 0; f < t.order; ++f)
        for (int g = 0; g < t.order; ++g) {
          const int fg = t.compose(f, g);
          for (int x = 0; x < a.objects[vi].size(); ++x)
            if (a.map_apply(vi, ui, fg, x) !=
                a.map_apply(wi, ui, f, a.map_apply(vi, wi, g, x)))
              return "composition law fails at (" + cat.rep(a.gi, vi).label +
                     "," + cat.rep(a.gi, wi).label + "," +
                     cat.rep(a.gi, ui).label + ") f=" + std::to_string(f) +
                     " g=" + std::to_string(g) + " x=" +
                     a.objects[vi].elements[x];
        }
      return std::nullopt;
    });
    report.add(prefix + "/composition", out.pass, out.witness, ms_since(t0));
  }

  // G-continuity: g X(f) g^{-1} = X(g f g^{-1})
  {
    auto t0 = Clock::now();
    auto out = par::sweep(pairs.size(), [&](long long p) -> std::optional<std::string> {
      auto [vi, wi] = pairs[p];
      const Rep& v = cat.rep(a.gi, vi);
      const Rep& w = cat.rep(a.gi, wi);
      const HyperocTables& t = hyperoc_tables(v.dim);
      const PointedGSet& ov = a.objects[vi];
      const PointedGSet& ow = a.objects[wi];
      for (int g = 0; g < group->order; ++g) {
        const int ginv = group->inv(g);
        const int rho_w = sp_lex_rank(w.rho[g]);
        const int rho_v_inv = sp_lex_rank(sp_inverse(v.rho[g]));
        for (int f = 0; f < t.order; ++f) {
          const int conj = t.compose(t.compose(rho_w, f), rho_v_inv);
          for (int x = 0; x < ov.size(); ++x)
            if (ow.act(g, a.map_apply(vi, wi, f, ov.act(ginv, x))) !=
                a.map_apply(vi, wi, conj, x))
              return "continuity fails at (" + v.label + "," + w.label +
                     ") g=" + group->labels[g] + " f=" + std::to_string(f) +
                     " x=" + ov.elements[x];
        }
      }
      return std::nullopt;
    });
    report.add(prefix + "/continuity", out.pass, out.witness, ms_since(t0));
  }

  return report;
}

namespace {

void require_coverage(const GlobalSpace& a) {
  const SiteCatalog& cat = *a.cat;
  if (static_cast<int>(a.components.size()) != cat.group_count())
    throw Error(ErrorCode::CoverageGap,
                "global " + a.name + ": components do not cover catalog groups");
  if (a.phi.size() != cat.homs.size())
    throw Error(ErrorCode::CoverageGap,
                "global " + a.name + ": phi does not cover catalog homs");
  for (size_t k = 0; k < cat.homs.size(); ++k) {
    int tg = cat.group_index(cat.homs[k].target);
    int sg = cat.group_index(cat.homs[k].source);
    if (static_cast<int>(a.phi[k].size()) != cat.rep_count(tg))
      throw Error(ErrorCode::CoverageGap,
                  "global " + a.name + ": phi at " + cat.homs[k].name +
                      " does not cover reps");
    for (int vi = 0; vi < cat.rep_count(tg); ++vi) {
      int rvi = cat.restricted_rep_index(static_cast<int>(k), vi);
      if (static_cast<int>(a.phi[k][vi].size()) !=
              a.components[tg].objects[vi].size() ||
          a.components[sg].objects[rvi].size() !=
              a.components[tg].objects[vi].size())
        throw Error(ErrorCode::CoverageGap,
                    "global " + a.name + ": phi size mismatch at " +
                        cat.homs[k].name + " V=" + cat.rep(tg, vi).label);
    }
  }
}

}  // namespace

Report check_global(const GlobalSpace& a) {
  require_coverage(a);
  const SiteCatalog& cat = *a.cat;
  const std::string prefix = "global/" + a.name;
  Report report;

  // phi components are based bijections
  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.homs.size(), [&](long long k) -> std::optional<std::string> {
      int tg = cat.group_index(cat.homs[k].target);
      int sg = cat.group_index(cat.homs[k].source);
      for (int vi = 0; vi < cat.rep_count(tg); ++vi) {
        const auto& tbl = a.phi[k][vi];
        int rvi = cat.restricted_rep_index(static_cast<int>(k), vi);
        const PointedGSet& src = a.components[tg].objects[vi];
        const PointedGSet& dst = a.components[sg].objects[rvi];
        std::vector<bool> hit(tbl.size(), false);
        for (size_t x = 0; x < tbl.size(); ++x) {
          if (tbl[x] < 0 || tbl[x] >= static_cast<int>(tbl.size()) || hit[tbl[x]])
            return "phi not bijective at " + cat.homs[k].name + " V=" +
                   cat.rep(tg, vi).label;
          hit[tbl[x]] = true;
        }
        if (tbl[src.basepoint] != dst.basepoint)
          return "phi not based at " + cat.homs[k].name + " V=" +
                 cat.rep(tg, vi).label;
      }
      return std::nullopt;
    });
    report.add(prefix + "/phi-bijective", out.pass, out.witness, ms_since(t0));
  }

  // phi components are equivariant
  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.homs.size(), [&](long long k) -> std::optional<std::string> {
      const GroupHom& alpha = cat.homs[k];
      int tg = cat.group_index(alpha.target);
      int sg = cat.group_index(alpha.source);
      for (int vi = 0; vi < cat.rep_count(tg); ++vi) {
        const auto& tbl = a.phi[k][vi];
        int rvi = cat.restricted_rep_index(static_cast<int>(k), vi);
        const PointedGSet& up = a.components[tg].objects[vi];
        const PointedGSet& down = a.components[sg].objects[rvi];
        for (int s = 0; s < alpha.source->order; ++s)
          for (int x = 0; x < up.size(); ++x)
            if (tbl[up.act(alpha(s), x)] != down.act(s, tbl[x]))
              return "phi not equivariant at " + alpha.name + " V=" +
                     cat.rep(tg, vi).label + " g=" + alpha.source->labels[s] +
                     " x=" + up.elements[x];
      }
      return std::nullopt;
    });
    report.add(prefix + "/phi-equivariant", out.pass, out.witness, ms_since(t0));
  }

  // phi natural in the rep
  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.homs.size(), [&](long long k) -> std::optional<std::string> {
      const GroupHom& alpha = cat.homs[k];
      int tg = cat.group_index(alpha.target);
      int sg = cat.group_index(alpha.source);
      const IGSpace& ah = a.components[tg];
      const IGSpace& ag = a.components[sg];
      for (const auto& [vi, wi] : cat.same_dim_pairs(tg)) {
        int rvi = cat.restricted_rep_index(static_cast<int>(k), vi);
        int rwi = cat.restricted_rep_index(static_cast<int>(k), wi);
        const int d = cat.rep(tg, vi).dim;
        const int hom_count = static_cast<int>(all_signed_perms(d).size());
        const auto& phiv = a.phi[k][vi];
        const auto& phiw = a.phi[k][wi];
        for (int f = 0; f < hom_count; ++f)
          for (int x = 0; x < ah.objects[vi].size(); ++x)
            if (phiw[ah.map_apply(vi, wi, f, x)] !=
                ag.map_apply(rvi, rwi, f, phiv[x]))
              return "phi not natural at " + alpha.name + " (" +
                     cat.rep(tg, vi).label + "," + cat.rep(tg, wi).label +
                     ") f=" + std::to_string(f) + " x=" +
                     ah.objects[vi].elements[x];
      }
      return std::nullopt;
    });
    report.add(prefix + "/phi-natural", out.pass, out.witness, ms_since(t0));
  }

  // cocycle over composable pairs, and the unit condition
  {
    auto t0 = Clock::now();
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < static_cast<int>(cat.homs.size()); ++x)
      for (int y = 0; y < static_cast<int>(cat.homs.size()); ++y)
        if (cat.homs[x].target.get() == cat.homs[y].source.get())
          pairs.emplace_back(x, y);
    auto out = par::sweep(pairs.size(), [&](long long i) -> std::optional<std::string> {
      auto [ka, kb] = pairs[i];  // alpha: S->T then beta: T->U
      int kc = cat.composite_hom_index(ka, kb);
      int ug = cat.group_index(cat.homs[kb].target);
      for (int vi = 0; vi < cat.rep_count(ug); ++vi) {
        int bvi = cat.restricted_rep_index(kb, vi);  // beta* V over T
        const auto& phi_b = a.phi[kb][vi];
        const auto& phi_a = a.phi[ka][bvi];
        const auto& phi_c = a.phi[kc][vi];
        for (size_t x = 0; x < phi_c.size(); ++x)
          if (phi_c[x] != phi_a[phi_b[x]])
            return "cocycle fails: alpha=" + cat.homs[ka].name + " beta=" +
                   cat.homs[kb].name + " V=" + cat.rep(ug, vi).label + " x=" +
                   std::to_string(x);
      }
      return std::nullopt;
    });
    report.add(prefix + "/cocycle", out.pass, out.witness, ms_since(t0));
  }
  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.homs.size(), [&](long long k) -> std::optional<std::string> {
      if (!cat.homs[k].is_identity_hom()) return std::nullopt;
      int tg = cat.group_index(cat.homs[k].target);
      for (int vi = 0; vi < cat.rep_count(tg); ++vi) {
        const auto& tbl = a.phi[k][vi];
        for (size_t x = 0; x < tbl.size(); ++x)
          if (tbl[x] != static_cast<int>(x))
            return "phi at the identity hom is not the identity: " +
                   cat.homs[k].name + " V=" + cat.rep(tg, vi).label;
      }
      return std::nullopt;
    });
    report.add(prefix + "/phi-unit", out.pass, out.witness, ms_since(t0));
  }

  // values on trivial reps carry the trivial action
  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.group_count(), [&](long long gi) -> std::optional<std::string> {
      for (int d = 0; d <= cat.dim_cap; ++d) {
        int ti = cat.trivial_rep_index(static_cast<int>(gi), d);
        if (!a.components[gi].objects[ti].has_trivial_action())
          return "nontrivial action on the trivial rep of dim " +
                 std::to_string(d) + " over " + cat.groups[gi]->name;
      }
      return std::nullopt;
    });
    report.add(prefix + "/trivial-action", out.pass, out.witness, ms_since(t0));
  }

  return report;
}

Report check_global_map(const GlobalMap& f, const GlobalSpace& a,
                        const GlobalSpace& b) {
  const SiteCatalog& cat = *a.cat;
  if (f.comp.size() != a.components.size() ||
      b.components.size() != a.components.size())
    throw Error(ErrorCode::CoverageGap, "global map " + f.name + ": coverage");
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    if (static_cast<int>(f.comp[gi].size()) != cat.rep_count(gi))
      throw Error(ErrorCode::CoverageGap,
                  "global map " + f.name + ": missing components over " +
                      cat.groups[gi]->name);
    for (int ri = 0; ri < cat.rep_count(gi); ++ri)
      if (static_cast<int>(f.comp[gi][ri].size()) !=
          a.components[gi].objects[ri].size())
        throw Error(ErrorCode::CoverageGap,
                    "global map " + f.name + ": component size mismatch");
  }
  const std::string prefix = "global-map/" + f.name;
  Report report;

  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.group_count(), [&](long long gi) -> std::optional<std::string> {
      for (int ri = 0; ri < cat.rep_count(static_cast<int>(gi)); ++ri) {
        const auto& tbl = f.comp[gi][ri];
        const PointedGSet& src = a.components[gi].objects[ri];
        const PointedGSet& dst = b.components[gi].objects[ri];
        for (int x = 0; x < src.size(); ++x)
          if (tbl[x] < 0 || tbl[x] >= dst.size())
            return "component out of range at " + cat.groups[gi]->name + "/" +
                   cat.rep(static_cast<int>(gi), ri).label;
        if (tbl[src.basepoint] != dst.basepoint)
          return "component not based at " + cat.groups[gi]->name + "/" +
                 cat.rep(static_cast<int>(gi), ri).label;
        for (int g = 0; g < cat.groups[gi]->order; ++g)
          for (int x = 0; x < src.size(); ++x)
            if (tbl[src.act(g, x)] != dst.act(g, tbl[x]))
              return "component not equivariant at " + cat.groups[gi]->name +
                     "/" + cat.rep(static_cast<int>(gi), ri).label + " (g,x)=(" +
                     cat.groups[gi]->labels[g] + "," + src.elements[x] + ")";
      }
      return std::nullopt;
    });
    report.add(prefix + "/equivariant", out.pass, out.witness, ms_since(t0));
  }

  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.group_count(), [&](long long gi) -> std::optional<std::string> {
      const IGSpace& ag = a.components[gi];
      const IGSpace& bg = b.components[gi];
      for (const auto& [vi, wi] : cat.same_dim_pairs(static_cast<int>(gi))) {
        const int d = cat.rep(static_cast<int>(gi), vi).dim;
        const int hom_count = static_cast<int>(all_signed_perms(d).size());
        for (int fr = 0; fr < hom_count; ++fr)
          for (int x = 0; x < ag.objects[vi].size(); ++x)
            if (f.comp[gi][wi][ag.map_apply(vi, wi, fr, x)] !=
                bg.map_apply(vi, wi, fr, f.comp[gi][vi][x]))
              return "naturality fails at " + cat.groups[gi]->name + " (" +
                     cat.rep(static_cast<int>(gi), vi).label + "," +
                     cat.rep(static_cast<int>(gi), wi).label + ") f=" +
                     std::to_string(fr) + " x=" + ag.objects[vi].elements[x];
      }
      return std::nullopt;
    });
    report.add(prefix + "/natural", out.pass, out.witness, ms_since(t0));
  }

  {
    auto t0 = Clock::now();
    auto out = par::sweep(cat.homs.size(), [&](long long k) -> std::optional<std::string> {
      int tg = cat.group_index(cat.homs[k].target);
      int sg = cat.group_index(cat.homs[k].source);
      for (int vi = 0; vi < cat.rep_count(tg); ++vi) {
        int rvi = cat.restricted_rep_index(static_cast<int>(k), vi);
        const auto& fa = f.comp[tg][vi];
        const auto& fs = f.comp[sg][rvi];
        const auto& phia = a.phi[k][vi];
        const auto& phib = b.phi[k][vi];
        for (size_t x = 0; x < fa.size(); ++x)
          if (phib[fa[x]] != fs[phia[x]])
            return "phi compatibility square fails at " + cat.homs[k].name +
                   " V=" + cat.rep(tg, vi).label + " x=" + std::to_string(x);
      }
      return std::nullopt;
    });
    report.add(prefix + "/phi-square", out.pass, out.witness, ms_since(t0));
  }

  return report;
}

}  // namespace equicat
