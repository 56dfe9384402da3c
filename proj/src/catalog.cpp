#include "equicat/catalog.hpp"

#include <algorithm>
#include <set>

#include "equicat/error.hpp"

namespace equicat {

int SiteCatalog::group_index(const std::string& gname) const {
  for (int i = 0; i < group_count(); ++i)
    if (groups[i]->name == gname) return i;
  return -1;
}

int SiteCatalog::group_index(const GroupPtr& g) const {
  for (int i = 0; i < group_count(); ++i)
    if (groups[i].get() == g.get()) return i;
  return -1;
}

int SiteCatalog::rep_index(int gi, const Rep& data) const {
  for (int i = 0; i < rep_count(gi); ++i)
    if (reps[gi][i] == data) return i;
  return -1;
}

int SiteCatalog::rep_index_by_label(int gi, const std::string& label) const {
  for (int i = 0; i < rep_count(gi); ++i)
    if (reps[gi][i].label == label) return i;
  return -1;
}

int SiteCatalog::hom_index(const std::string& hname) const {
  for (int i = 0; i < static_cast<int>(homs.size()); ++i)
    if (homs[i].name == hname) return i;
  return -1;
}

void SiteCatalog::finalize() {
  const int ng = group_count();
  trivial_group_idx_ = -1;
  for (int gi = 0; gi < ng; ++gi)
    if (groups[gi]->order == 1) trivial_group_idx_ = gi;

  trivial_idx_.assign(ng, std::vector<int>(dim_cap + 1, -1));
  for (int gi = 0; gi < ng; ++gi)
    for (int d = 0; d <= dim_cap; ++d) {
      int idx = rep_index(gi, trivial_rep(groups[gi], d));
      if (idx < 0)
        throw Error(ErrorCode::CatalogIncomplete,
                    "catalog: missing trivial rep of dim " + std::to_string(d) +
                        " over " + groups[gi]->name);
      trivial_idx_[gi][d] = idx;
    }

  restricted_idx_.assign(homs.size(), {});
  for (size_t k = 0; k < homs.size(); ++k) {
    const GroupHom& alpha = homs[k];
    int sg = group_index(alpha.source), tg = group_index(alpha.target);
    if (sg < 0 || tg < 0)
      throw Error(ErrorCode::BadInput, "catalog: hom between unknown groups");
    restricted_idx_[k].resize(rep_count(tg));
    for (int vi = 0; vi < rep_count(tg); ++vi) {
      int idx = rep_index(sg, rep_restrict(alpha, reps[tg][vi]));
      if (idx < 0)
        throw Error(ErrorCode::CatalogIncomplete,
                    "catalog: not closed under restriction along " + alpha.name +
                        " at " + reps[tg][vi].label);
      restricted_idx_[k][vi] = idx;
    }
  }

  sum_idx_.assign(ng, {});
  same_dim_pairs_.assign(ng, {});
  for (int gi = 0; gi < ng; ++gi) {
    const int n = rep_count(gi);
    sum_idx_[gi].assign(static_cast<size_t>(n) * n, -1);
    for (int vi = 0; vi < n; ++vi)
      for (int wi = 0; wi < n; ++wi) {
        if (reps[gi][vi].dim == reps[gi][wi].dim)
          same_dim_pairs_[gi].emplace_back(vi, wi);
        if (reps[gi][vi].dim + reps[gi][wi].dim <= dim_cap) {
          int idx = rep_index(gi, rep_direct_sum(reps[gi][vi], reps[gi][wi]));
          sum_idx_[gi][static_cast<size_t>(vi) * n + wi] = idx;
        }
      }
  }

  to_trivial_hom_.assign(ng, -1);
  for (size_t k = 0; k < homs.size(); ++k) {
    int sg = group_index(homs[k].source), tg = group_index(homs[k].target);
    if (tg == trivial_group_idx_) to_trivial_hom_[sg] = static_cast<int>(k);
  }

  const int nhoms = static_cast<int>(homs.size());
  comp_idx_.assign(static_cast<size_t>(nhoms) * nhoms, -1);
  for (int a = 0; a < nhoms; ++a)
    for (int b = 0; b < nhoms; ++b) {
      if (homs[a].target.get() != homs[b].source.get()) continue;
      GroupHom composite = compose_homs(homs[b], homs[a]);
      int found = -1;
      for (int c = 0; c < nhoms; ++c)
        if (homs[c].source.get() == composite.source.get() &&
            homs[c].target.get() == composite.target.get() &&
            homs[c].image == composite.image)
          found = c;
      if (found < 0)
        throw Error(ErrorCode::BadInput,
                    "catalog: homs are not composition-closed (" +
                        homs[a].name + " then " + homs[b].name + ")");
      comp_idx_[static_cast<size_t>(a) * nhoms + b] = found;
    }
}

namespace {

// Appends r to the group's list unless identical data is present; keeps
// labels unique within the group.
bool add_rep_dedup(std::vector<Rep>& list, std::set<std::string>& labels,
                   Rep r) {
  for (const Rep& existing : list)
    if (existing == r) return false;
  while (labels.count(r.label)) r.label += "'";
  labels.insert(r.label);
  list.push_back(std::move(r));
  return true;
}

}  // namespace

SiteCatalog build_catalog(const CatalogSpec& spec) {
  SiteCatalog cat;
  cat.name = spec.name;
  cat.dim_cap = spec.dim_cap;
  cat.groups = spec.groups;
  if (cat.groups.empty())
    throw Error(ErrorCode::BadInput, "catalog: no groups");
  {
    std::set<std::string> names;
    for (const GroupPtr& g : cat.groups)
      if (!names.insert(g->name).second)
        throw Error(ErrorCode::BadInput, "catalog: duplicate group " + g->name);
  }

  if (spec.homs.has_value()) {
    cat.homs = *spec.homs;
    for (const GroupHom& h : cat.homs)
      if (cat.group_index(h.source) < 0 || cat.group_index(h.target) < 0)
        throw Error(ErrorCode::BadInput,
                    "catalog: hom " + h.name + " references unknown group");
  } else {
    for (const GroupPtr& s : cat.groups)
      for (const GroupPtr& t : cat.groups) {
        std::vector<GroupHom> hs = enumerate_homs(s, t);
        cat.homs.insert(cat.homs.end(), hs.begin(), hs.end());
      }
  }

  const int ng = cat.group_count();
  cat.reps.assign(ng, {});
  std::vector<std::set<std::string>> labels(ng);
  for (int gi = 0; gi < ng; ++gi)
    for (int d = 0; d <= cat.dim_cap; ++d)
      add_rep_dedup(cat.reps[gi], labels[gi], trivial_rep(cat.groups[gi], d));
  for (const Rep& seed : spec.seed_reps) {
    int gi = cat.group_index(seed.group);
    if (gi < 0)
      throw Error(ErrorCode::BadInput,
                  "catalog: seed rep " + seed.label + " over unknown group");
    if (seed.dim > cat.dim_cap)
      throw Error(ErrorCode::DimCapExceeded,
                  "catalog: seed rep " + seed.label + " exceeds dim_cap");
    add_rep_dedup(cat.reps[gi], labels[gi],
                  make_rep(seed.group, seed.dim, seed.rho, seed.label));
  }

  if (spec.close_reps) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (const GroupHom& alpha : cat.homs) {
        int sg = cat.group_index(alpha.source);
        int tg = cat.group_index(alpha.target);
        const size_t snapshot = cat.reps[tg].size();
        for (size_t vi = 0; vi < snapshot; ++vi) {
          Rep r = rep_restrict(alpha, cat.reps[tg][vi]);
          if (cat.rep_index(sg, r) < 0) {
            add_rep_dedup(cat.reps[sg], labels[sg], std::move(r));
            grew = true;
          }
        }
      }
      for (int gi = 0; gi < ng; ++gi) {
        const size_t snapshot = cat.reps[gi].size();
        for (size_t vi = 0; vi < snapshot; ++vi)
          for (size_t wi = 0; wi < snapshot; ++wi) {
            const Rep& v = cat.reps[gi][vi];
            const Rep& w = cat.reps[gi][wi];
            if (v.dim + w.dim > cat.dim_cap) continue;
            Rep r = rep_direct_sum(v, w);
            if (cat.rep_index(gi, r) < 0) {
              add_rep_dedup(cat.reps[gi], labels[gi], std::move(r));
              grew = true;
            }
          }
      }
    }
  }

  cat.gsets.assign(ng, {});
  for (const PointedGSet& s : spec.gsets) {
    int gi = cat.group_index(s.group);
    if (gi < 0)
      throw Error(ErrorCode::BadInput,
                  "catalog: gset " + s.name + " over unknown group");
    cat.gsets[gi].push_back(s);
  }

  cat.finalize();
  return cat;
}

SiteCatalog standard_catalog(int dim_cap) {
  CatalogSpec spec;
  spec.name = "standard";
  spec.dim_cap = dim_cap;
  GroupPtr e = trivial_group();
  GroupPtr c2 = cyclic_group(2, "C2");
  GroupPtr c3 = cyclic_group(3, "C3");
  GroupPtr v4 = group_product(cyclic_group(2, "A"), cyclic_group(2, "B")).group;
  // rename the product for catalog purposes
  {
    auto g = std::make_shared<FiniteGroup>(*v4);
    g->name = "V4";
    v4 = g;
  }
  GroupPtr s3 = symmetric_3();
  spec.groups = {e, c2, c3, v4, s3};

  // sign representation of C2
  {
    SignedPerm neg(1);
    neg.signs[0] = -1;
    spec.seed_reps.push_back(
        make_rep(c2, 1, {sp_identity(1), neg}, "sign"));
  }
  // sign representation of S3 (by parity of the permutation)
  {
    SignedPerm neg(1);
    neg.signs[0] = -1;
    std::vector<SignedPerm> rho = {sp_identity(1), neg,          neg,
                                   neg,            sp_identity(1), sp_identity(1)};
    spec.seed_reps.push_back(make_rep(s3, 1, std::move(rho), "sgn"));
  }
  // coordinate permutation representation of S3 on R^3
  {
    auto perm_of = [](std::initializer_list<int> v) {
      SignedPerm f(3);
      int i = 0;
      for (int x : v) f.perm[i++] = static_cast<int8_t>(x);
      return f;
    };
    std::vector<SignedPerm> rho = {perm_of({0, 1, 2}), perm_of({1, 0, 2}),
                                   perm_of({2, 1, 0}), perm_of({0, 2, 1}),
                                   perm_of({1, 2, 0}), perm_of({2, 0, 1})};
    spec.seed_reps.push_back(make_rep(s3, 3, std::move(rho), "perm3"));
  }

  // pointed G-sets for the fibration checks; sizes stay <= 5
  spec.gsets.push_back(s0_gset(e));
  {
    std::vector<int> tbl = {0, 1, 2, 0, 2, 1};
    spec.gsets.push_back(
        make_pointed_gset(c2, {"*", "a", "b"}, 0, std::move(tbl), "swap"));
  }
  {
    // two free C2-orbits
    std::vector<int> tbl = {0, 1, 2, 3, 4, 0, 2, 1, 4, 3};
    spec.gsets.push_back(make_pointed_gset(c2, {"*", "a", "b", "c", "d"}, 0,
                                           std::move(tbl), "swap2x"));
  }
  {
    std::vector<int> tbl = {0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2};
    spec.gsets.push_back(
        make_pointed_gset(c3, {"*", "x", "y", "z"}, 0, std::move(tbl), "rot"));
  }
  {
    // cosets of the second C2 factor: the first generator swaps p and q,
    // the second fixes everything
    std::vector<int> tbl = {0, 1, 2, 0, 1, 2, 0, 2, 1, 0, 2, 1};
    spec.gsets.push_back(
        make_pointed_gset(v4, {"*", "p", "q"}, 0, std::move(tbl), "cosets"));
  }
  {
    // S3 on the three letters, plus basepoint: elements {*, 0, 1, 2}
    GroupPtr g = s3;
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<int> tbl(6 * 4);
    for (int a = 0; a < 6; ++a) {
      tbl[a * 4] = 0;
      for (int x = 0; x < 3; ++x) tbl[a * 4 + 1 + x] = 1 + perms[a][x];
    }
    spec.gsets.push_back(
        make_pointed_gset(g, {"*", "l0", "l1", "l2"}, 0, std::move(tbl), "letters"));
  }
  {
    // S3 letters plus a fixed point
    GroupPtr g = s3;
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<int> tbl(6 * 5);
    for (int a = 0; a < 6; ++a) {
      tbl[a * 5] = 0;
      for (int x = 0; x < 3; ++x) tbl[a * 5 + 1 + x] = 1 + perms[a][x];
      tbl[a * 5 + 4] = 4;
    }
    spec.gsets.push_back(make_pointed_gset(
        g, {"*", "l0", "l1", "l2", "fix"}, 0, std::move(tbl), "letters+"));
  }

  return build_catalog(spec);
}

}  // namespace equicat
