#pragma once

#include <string>
#include <vector>

#include "equicat/catalog.hpp"
#include "equicat/gset.hpp"

namespace equicat {

/// Functor data over one group's slice of the catalog: a pointed G-set per
/// catalog rep and, for every same-dimension rep pair, a based map per
/// hom-space element. Data is extensional; the checkers never assume how
/// it was generated.
struct IGSpace {
  const SiteCatalog* cat = nullptr;
  int gi = -1;
  std::string name;
  std::vector<PointedGSet> objects;           // per rep index
  std::vector<std::vector<int16_t>> morph;    // per same-dim pair id: [f*size(V)+x]
  std::vector<int> pair_pos;                  // vi*nreps+wi -> pair id, -1 if dims differ

  const GroupPtr& group() const { return cat->groups[gi]; }
  int nreps() const { return cat->rep_count(gi); }
  const PointedGSet& obj(int ri) const { return objects[ri]; }

  int pair_id(int vi, int wi) const { return pair_pos[vi * nreps() + wi]; }

  /// Image of element x under the morphism with hom rank f at pair (vi,wi).
  int map_apply(int vi, int wi, int f, int x) const {
    const int p = pair_id(vi, wi);
    return morph[p][static_cast<size_t>(f) * objects[vi].size() + x];
  }

  void init_pair_layout();  // fills pair_pos and sizes morph
};

/// Compatible family {A_G} with explicit coherence bijections: for each
/// catalog hom alpha: G -> H and rep V over H, a based bijection
/// phi[hom][V]: A_H(V) -> A_G(alpha* V). Stored explicitly even when it is
/// the identity; the checkers never assume identity phi.
struct GlobalSpace {
  const SiteCatalog* cat = nullptr;
  std::string name;
  std::vector<IGSpace> components;                      // per group index
  std::vector<std::vector<std::vector<int16_t>>> phi;   // [hom][rep over target]

  const IGSpace& component(int gi) const { return components[gi]; }
};

/// Morphism of global functors: an equivariant component per (group, rep),
/// required to commute with both families' phi.
struct GlobalMap {
  std::string name;
  std::vector<std::vector<std::vector<int16_t>>> comp;  // [gi][ri][x]
};

/// Composite map g(f(x)) componentwise.
GlobalMap compose_global_maps(const GlobalMap& g, const GlobalMap& f);

GlobalMap identity_global_map(const GlobalSpace& a);

}  // namespace equicat
