#include "equicat/site_checks.hpp"

#include <chrono>

#include "equicat/hom_space.hpp"
#include "equicat/parallel.hpp"

namespace equicat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Per-rep signed-perm ranks so hot loops work in rank space.
struct RankCache {
  std::vector<std::vector<std::vector<uint16_t>>> rho;      // [gi][ri][g]
  std::vector<std::vector<std::vector<uint16_t>>> rho_inv;  // [gi][ri][g]

  explicit RankCache(const SiteCatalog& cat) {
    rho.resize(cat.group_count());
    rho_inv.resize(cat.group_count());
    for (int gi = 0; gi < cat.group_count(); ++gi) {
      rho[gi].resize(cat.rep_count(gi));
      rho_inv[gi].resize(cat.rep_count(gi));
      for (int ri = 0; ri < cat.rep_count(gi); ++ri) {
        const Rep& v = cat.rep(gi, ri);
        for (const SignedPerm& f : v.rho) {
          rho[gi][ri].push_back(static_cast<uint16_t>(sp_lex_rank(f)));
          rho_inv[gi][ri].push_back(
              static_cast<uint16_t>(sp_lex_rank(sp_inverse(f))));
        }
      }
    }
  }
};

void add_sweep(Report& report, const std::string& name,
               const par::SweepOutcome& out, double millis) {
  report.add(name, out.pass, out.witness, millis);
}

}  // namespace

Report check_site_axioms(const SiteCatalog& cat) {
  Report report;
  const int nhoms = static_cast<int>(cat.homs.size());

  // id* = id on rep data
  {
    auto t0 = Clock::now();
    std::vector<std::pair<int, int>> items;  // (hom, rep over target)
    for (int k = 0; k < nhoms; ++k) {
      if (!cat.homs[k].is_identity_hom()) continue;
      int tg = cat.group_index(cat.homs[k].target);
      for (int vi = 0; vi < cat.rep_count(tg); ++vi) items.emplace_back(k, vi);
    }
    auto out = par::sweep(items.size(), [&](long long i) -> std::optional<std::string> {
      auto [k, vi] = items[i];
      int tg = cat.group_index(cat.homs[k].target);
      const Rep& v = cat.rep(tg, vi);
      if (rep_restrict(cat.homs[k], v) != v)
        return "id* differs from identity at hom=" + cat.homs[k].name +
               " rep=" + v.label;
      return std::nullopt;
    });
    add_sweep(report, "site-axioms/identity", out, ms_since(t0));
  }

  // (beta alpha)* = alpha* o beta* strictly
  {
    auto t0 = Clock::now();
    std::vector<std::pair<int, int>> pairs;  // alpha: G->H, beta: H->K
    for (int a = 0; a < nhoms; ++a)
      for (int b = 0; b < nhoms; ++b)
        if (cat.homs[a].target.get() == cat.homs[b].source.get())
          pairs.emplace_back(a, b);
    auto out = par::sweep(pairs.size(), [&](long long i) -> std::optional<std::string> {
      auto [a, b] = pairs[i];
      const GroupHom& alpha = cat.homs[a];
      const GroupHom& beta = cat.homs[b];
      GroupHom composite = compose_homs(beta, alpha);
      int kg = cat.group_index(beta.target);
      for (int vi = 0; vi < cat.rep_count(kg); ++vi) {
        const Rep& v = cat.rep(kg, vi);
        Rep lhs = rep_restrict(composite, v);
        Rep rhs = rep_restrict(alpha, rep_restrict(beta, v));
        if (lhs != rhs)
          return "composite restriction mismatch: alpha=" + alpha.name +
                 " beta=" + beta.name + " rep=" + v.label;
      }
      return std::nullopt;
    });
    add_sweep(report, "site-axioms/compose", out, ms_since(t0));
  }

  // alpha* full and faithful: identity on hom-space elements, actions match
  {
    auto t0 = Clock::now();
    RankCache ranks(cat);
    struct Item {
      int k, vi, wi;
    };
    std::vector<Item> items;
    for (int k = 0; k < nhoms; ++k) {
      int tg = cat.group_index(cat.homs[k].target);
      for (const auto& [vi, wi] : cat.same_dim_pairs(tg))
        items.push_back({k, vi, wi});
    }
    auto out = par::sweep(items.size(), [&](long long i) -> std::optional<std::string> {
      const auto& [k, vi, wi] = items[i];
      const GroupHom& alpha = cat.homs[k];
      int sg = cat.group_index(alpha.source);
      int tg = cat.group_index(alpha.target);
      int rvi = cat.restricted_rep_index(k, vi);
      int rwi = cat.restricted_rep_index(k, wi);
      const int dim = cat.rep(tg, vi).dim;
      const HyperocTables& t = hyperoc_tables(dim);
      const auto& rho_w = ranks.rho[tg][wi];
      const auto& rho_v_inv = ranks.rho_inv[tg][vi];
      const auto& rho_rw = ranks.rho[sg][rwi];
      const auto& rho_rv_inv = ranks.rho_inv[sg][rvi];
      const int ns = alpha.source->order;
      for (int s1 = 0; s1 < ns; ++s1)
        for (int s2 = 0; s2 < ns; ++s2)
          for (int f = 0; f < t.order; ++f) {
            int upstairs = t.compose(t.compose(rho_w[alpha(s2)], f),
                                     rho_v_inv[alpha(s1)]);
            int downstairs =
                t.compose(t.compose(rho_rw[s2], f), rho_rv_inv[s1]);
            if (upstairs != downstairs)
              return "restricted action mismatch: alpha=" + alpha.name +
                     " V=" + cat.rep(tg, vi).label + " W=" +
                     cat.rep(tg, wi).label + " (g,h,f)=(" +
                     alpha.source->labels[s1] + "," +
                     alpha.source->labels[s2] + "," + std::to_string(f) + ")";
          }
      return std::nullopt;
    });
    add_sweep(report, "site-axioms/full-faithful", out, ms_since(t0));
  }

  // alpha*(V (+) W) = alpha*V (+) alpha*W strictly
  {
    auto t0 = Clock::now();
    std::vector<int> items(nhoms);
    for (int k = 0; k < nhoms; ++k) items[k] = k;
    auto out = par::sweep(items.size(), [&](long long i) -> std::optional<std::string> {
      const GroupHom& alpha = cat.homs[items[i]];
      int tg = cat.group_index(alpha.target);
      for (int vi = 0; vi < cat.rep_count(tg); ++vi)
        for (int wi = 0; wi < cat.rep_count(tg); ++wi) {
          const Rep& v = cat.rep(tg, vi);
          const Rep& w = cat.rep(tg, wi);
          if (v.dim + w.dim > cat.dim_cap) continue;
          Rep lhs = rep_restrict(alpha, rep_direct_sum(v, w));
          Rep rhs = rep_direct_sum(rep_restrict(alpha, v), rep_restrict(alpha, w));
          if (lhs != rhs)
            return "restriction does not commute with sum: alpha=" +
                   alpha.name + " V=" + v.label + " W=" + w.label;
        }
      return std::nullopt;
    });
    add_sweep(report, "site-axioms/sum-commute", out, ms_since(t0));
  }

  return report;
}

Report check_restriction_object(const SiteCatalog& cat) {
  Report report;
  auto t0 = Clock::now();
  RankCache ranks(cat);
  struct Item {
    int k, vi, zg, zi;
  };
  std::vector<Item> items;
  for (int k = 0; k < static_cast<int>(cat.homs.size()); ++k) {
    int tg = cat.group_index(cat.homs[k].target);
    for (int vi = 0; vi < cat.rep_count(tg); ++vi)
      for (int zg = 0; zg < cat.group_count(); ++zg)
        for (int zi = 0; zi < cat.rep_count(zg); ++zi)
          if (cat.rep(zg, zi).dim == cat.rep(tg, vi).dim)
            items.push_back({k, vi, zg, zi});
  }
  auto out = par::sweep(items.size(), [&](long long i) -> std::optional<std::string> {
    const auto& [k, vi, zg, zi] = items[i];
    const GroupHom& alpha = cat.homs[k];
    int sg = cat.group_index(alpha.source);
    int tg = cat.group_index(alpha.target);
    int rvi = cat.restricted_rep_index(k, vi);
    const int dim = cat.rep(tg, vi).dim;
    const HyperocTables& t = hyperoc_tables(dim);
    {
      HomSpace restricted = hom_space(cat.rep(zg, zi), cat.rep(sg, rvi));
      HomSpace original = hom_space(cat.rep(zg, zi), cat.rep(tg, vi));
      bool same_list = &restricted.elements() == &original.elements() ||
                       restricted.elements() == original.elements();
      if (restricted.size() != original.size() || !same_list)
        return "hom-space element lists differ: alpha=" + alpha.name + " V=" +
               cat.rep(tg, vi).label + " Z=" + cat.rep(zg, zi).label;
    }
    const auto& rho_v = ranks.rho[tg][vi];
    const auto& rho_rv = ranks.rho[sg][rvi];
    const auto& rho_z_inv = ranks.rho_inv[zg][zi];
    const int nk = cat.groups[zg]->order;
    const int ns = alpha.source->order;
    for (int kk = 0; kk < nk; ++kk)
      for (int s = 0; s < ns; ++s)
        for (int f = 0; f < t.order; ++f) {
          int lhs = t.compose(t.compose(rho_rv[s], f), rho_z_inv[kk]);
          int rhs = t.compose(t.compose(rho_v[alpha(s)], f), rho_z_inv[kk]);
          if (lhs != rhs)
            return "restriction object mismatch: alpha=" + alpha.name +
                   " V=" + cat.rep(tg, vi).label + " Z=" +
                   cat.rep(zg, zi).label + " (k,g,f)=(" +
                   cat.groups[zg]->labels[kk] + "," +
                   alpha.source->labels[s] + "," + std::to_string(f) + ")";
        }
    return std::nullopt;
  });
  add_sweep(report, "fibration/restriction-object", out, ms_since(t0));
  return report;
}

Report check_grothendieck(const SiteCatalog& cat) {
  Report report;
  auto t0 = Clock::now();
  struct Item {
    int gi, vi, wi;
  };
  std::vector<Item> items;
  for (int gi = 0; gi < cat.group_count(); ++gi)
    for (const auto& [vi, wi] : cat.same_dim_pairs(gi))
      items.push_back({gi, vi, wi});
  auto out = par::sweep(items.size(), [&](long long i) -> std::optional<std::string> {
    const auto& [gi, vi, wi] = items[i];
    const Rep& v = cat.rep(gi, vi);
    const Rep& w = cat.rep(gi, wi);
    DiagonalHomSpace diag = diagonal_hom(v, w);
    HomSpace full = hom_space(v, w);
    for (int g = 0; g < v.group->order; ++g)
      for (int f = 0; f < full.size(); ++f)
        if (diag.action(g, f) != full.action(g, g, f))
          return "diagonal action differs from restricted two-sided action:"
                 " G=" + v.group->name + " V=" + v.label + " W=" + w.label +
                 " (g,f)=(" + v.group->labels[g] + "," + std::to_string(f) + ")";
    return std::nullopt;
  });
  add_sweep(report, "grothendieck/diagonal-roundtrip", out, ms_since(t0));
  return report;
}

}  // namespace equicat
