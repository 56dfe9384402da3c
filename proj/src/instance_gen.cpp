#include "equicat/instance_gen.hpp"

#include <algorithm>
#include <set>

#include "equicat/error.hpp"
#include "equicat/signed_perm.hpp"

namespace equicat {

namespace {

// Subgroup closure of a generating set inside B_d, as sorted ranks.
std::vector<int> subgroup_closure(int dim, std::vector<int> gens) {
  const HyperocTables& t = hyperoc_tables(dim);
  std::set<int> elems{t.identity_rank};
  for (int g : gens) elems.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(elems.begin(), elems.end());
    for (int a : snapshot)
      for (int b : snapshot)
        if (elems.insert(t.compose(a, b)).second) grew = true;
    for (int a : snapshot)
      if (elems.insert(t.inv[a]).second) grew = true;
  }
  return {elems.begin(), elems.end()};
}

// Coset space B_d / H as a lawful left B_d-set; cosets keyed by their
// minimal element.
struct CosetSpace {
  std::vector<int> coset_of;  // rank -> coset id
  int count = 0;
};

CosetSpace coset_space(int dim, const std::vector<int>& subgroup) {
  const HyperocTables& t = hyperoc_tables(dim);
  CosetSpace cs;
  cs.coset_of.assign(t.order, -1);
  for (int g = 0; g < t.order; ++g) {
    if (cs.coset_of[g] >= 0) continue;
    for (int h : subgroup) cs.coset_of[t.compose(g, h)] = cs.count;
    ++cs.count;
  }
  return cs;
}

}  // namespace

ISpace random_ispace(uint64_t seed, int index, int dim_cap) {
  Rng rng(seed * 0x51f15ee1ULL + static_cast<uint64_t>(index) * 0x9e377ULL + 1);
  ISpace x;
  x.dim_cap = dim_cap;
  x.name = "rand" + std::to_string(index);
  for (int d = 0; d <= dim_cap; ++d) {
    const HyperocTables& t = hyperoc_tables(d);
    // choose orbits until the pointed size budget (6) is filled
    std::vector<CosetSpace> orbits;
    std::vector<int> orbit_sizes;
    int total = 1;  // basepoint
    const int norbits = 1 + rng.below(2);
    for (int k = 0; k < norbits; ++k) {
      for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<int> gens;
        const int ngens = 1 + rng.below(2);
        for (int i = 0; i < ngens; ++i) gens.push_back(rng.below(t.order));
        std::vector<int> sub = subgroup_closure(d, gens);
        int size = t.order / static_cast<int>(sub.size());
        if (total + size <= 6) {
          orbits.push_back(coset_space(d, sub));
          orbit_sizes.push_back(size);
          total += size;
          break;
        }
      }
    }
    if (orbits.empty()) {
      // the one-point orbit (full subgroup) always fits
      std::vector<int> all(t.order);
      for (int i = 0; i < t.order; ++i) all[i] = i;
      orbits.push_back(coset_space(d, all));
      orbit_sizes.push_back(1);
      total += 1;
    }

    PointedSet val;
    val.basepoint = 0;
    val.elements.push_back("*");
    std::vector<int> orbit_offset(orbits.size());
    for (size_t k = 0; k < orbits.size(); ++k) {
      orbit_offset[k] = val.size();
      for (int c = 0; c < orbit_sizes[k]; ++c)
        val.elements.push_back("o" + std::to_string(k) + "c" + std::to_string(c));
    }
    const int m = val.size();
    std::vector<int16_t> tbl(static_cast<size_t>(t.order) * m);
    for (int f = 0; f < t.order; ++f) {
      tbl[static_cast<size_t>(f) * m] = 0;
      for (size_t k = 0; k < orbits.size(); ++k) {
        const CosetSpace& cs = orbits[k];
        // coset id c corresponds to any rank g with coset_of[g] = c;
        // f.(gH) = (f g)H
        std::vector<int> witness(cs.count, -1);
        for (int g = 0; g < t.order; ++g)
          if (witness[cs.coset_of[g]] < 0) witness[cs.coset_of[g]] = g;
        for (int c = 0; c < cs.count; ++c)
          tbl[static_cast<size_t>(f) * m + orbit_offset[k] + c] =
              static_cast<int16_t>(orbit_offset[k] +
                                   cs.coset_of[t.compose(f, witness[c])]);
      }
    }
    x.values.push_back(std::move(val));
    x.morph.push_back(std::move(tbl));
  }
  validate_ispace(x);
  return x;
}

std::vector<std::vector<int16_t>> random_ispace_map(const ISpace& x,
                                                    const ISpace& y, Rng& rng) {
  std::vector<std::vector<int16_t>> out;
  for (int d = 0; d <= x.dim_cap; ++d) {
    const HyperocTables& t = hyperoc_tables(d);
    const int mx = x.value_size(d), my = y.value_size(d);
    // enumerate equivariant based maps by brute force and pick one
    std::vector<std::vector<int16_t>> candidates;
    std::vector<int16_t> f(mx, 0);
    f[x.values[d].basepoint] = static_cast<int16_t>(y.values[d].basepoint);
    std::vector<int> free_pos;
    for (int e = 0; e < mx; ++e)
      if (e != x.values[d].basepoint) free_pos.push_back(e);
    std::vector<int> counter(free_pos.size(), 0);
    while (true) {
      for (size_t i = 0; i < free_pos.size(); ++i)
        f[free_pos[i]] = static_cast<int16_t>(counter[i]);
      bool ok = true;
      for (int ff = 0; ff < t.order && ok; ++ff)
        for (int e = 0; e < mx && ok; ++e)
          ok = f[x.map_apply(d, ff, e)] == y.map_apply(d, ff, f[e]);
      if (ok) candidates.push_back(f);
      size_t i = 0;
      while (i < counter.size() && counter[i] == my - 1) counter[i++] = 0;
      if (i == counter.size()) break;
      ++counter[i];
    }
    if (candidates.empty())
      throw Error(ErrorCode::BadInput, "no equivariant map exists at dim " +
                                           std::to_string(d));
    out.push_back(candidates[rng.below(static_cast<int>(candidates.size()))]);
  }
  return out;
}

GlobalMap extend_map(const std::vector<std::vector<int16_t>>& f,
                     const GlobalExtension& ex, const GlobalExtension& ey,
                     const std::string& name) {
  const SiteCatalog& cat = *ex.space.cat;
  GlobalMap out;
  out.name = name;
  out.comp.resize(cat.group_count());
  for (int gi = 0; gi < cat.group_count(); ++gi) {
    out.comp[gi].resize(cat.rep_count(gi));
    for (int vi = 0; vi < cat.rep_count(gi); ++vi) {
      const KanResult& kx = ex.kan[gi][vi];
      const KanResult& ky = ey.kan[gi][vi];
      auto& tbl = out.comp[gi][vi];
      tbl.resize(kx.classes.size());
      for (size_t c = 0; c < kx.classes.size(); ++c) {
        auto [s, e] = kx.classes[c];
        tbl[c] = static_cast<int16_t>(
            ky.class_of[static_cast<size_t>(s) * ky.source_size +
                        f[cat.rep(gi, vi).dim][e]]);
      }
    }
  }
  return out;
}

}  // namespace equicat
