#pragma once

#include <string>
#include <vector>

#include "equicat/group.hpp"

namespace equicat {

/// Plain finite pointed set (used for I-space values, which carry no
/// group action).
struct PointedSet {
  std::vector<std::string> elements;
  int basepoint = 0;

  int size() const { return static_cast<int>(elements.size()); }
};

/// Finite pointed G-set: the model's stand-in for a based G-space.
/// The action table must fix the basepoint and satisfy the group laws.
struct PointedGSet {
  GroupPtr group;  // the extent
  std::vector<std::string> elements;
  int basepoint = 0;
  std::vector<int> action;  // |G| x |elements|
  std::string name;

  int size() const { return static_cast<int>(elements.size()); }
  int act(int g, int x) const { return action[g * size() + x]; }
  bool has_trivial_action() const;

  friend bool operator==(const PointedGSet& a, const PointedGSet& b) {
    return a.group.get() == b.group.get() && a.elements == b.elements &&
           a.basepoint == b.basepoint && a.action == b.action;
  }
};

/// Validates basepoint fixing and the action laws; throws BadInput.
PointedGSet make_pointed_gset(GroupPtr group,
                              std::vector<std::string> elements, int basepoint,
                              std::vector<int> action, std::string name);

/// Two-point set with trivial action; the unit for smash.
PointedGSet s0_gset(const GroupPtr& group);

PointedGSet one_point_gset(const GroupPtr& group);

/// Based map between pointed (G-)sets; equivariance is not required.
struct PointedMap {
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  int size() const { return static_cast<int>(map.size()); }

  friend bool operator==(const PointedMap& a, const PointedMap& b) {
    return a.map == b.map;
  }
  friend bool operator!=(const PointedMap& a, const PointedMap& b) {
    return !(a == b);
  }
};

PointedMap identity_map(int size);
PointedMap compose_maps(const PointedMap& second, const PointedMap& first);
bool is_based(const PointedMap& f, int source_base, int target_base);
bool is_equivariant(const PointedMap& f, const PointedGSet& x,
                    const PointedGSet& y);

/// Smash product over a common extent: non-base elements are pairs of
/// non-base elements in lexicographic order after the basepoint, with the
/// diagonal action.
PointedGSet smash(const PointedGSet& x, const PointedGSet& y);

/// Index of the smash element for a pair; either coordinate at its
/// basepoint collapses to the smash basepoint.
int smash_pair_index(const PointedGSet& x, const PointedGSet& y, int xi,
                     int yi);

/// Given a smash index, recover the pair (base maps to (base, base)).
std::pair<int, int> smash_pair_of_index(const PointedGSet& x,
                                        const PointedGSet& y, int idx);

PointedMap smash_of_maps(const PointedGSet& x, const PointedGSet& y,
                         const PointedGSet& x2, const PointedGSet& y2,
                         const PointedMap& f, const PointedMap& g);

/// Action composed with alpha; the underlying pointed set is unchanged.
PointedGSet restrict_gset(const GroupHom& alpha, const PointedGSet& x);

/// The space of all based maps X -> Y with the conjugation action of
/// extent(X) x extent(Y): (g,h).f = (x -> h f(g^-1 x)).
struct MapSpace {
  PointedGSet source, target;
  std::vector<PointedMap> elements;  // lexicographic on the map array

  int size() const { return static_cast<int>(elements.size()); }
  int rank_of(const PointedMap& f) const;
  /// Index of (g,h).f_idx.
  int action(int g, int h, int f_idx) const;
};

MapSpace map_space(const PointedGSet& x, const PointedGSet& y);

/// Fixed points of the diagonal conjugation action for a common extent:
/// exactly the equivariant based maps.
std::vector<PointedMap> equivariant_maps(const PointedGSet& x,
                                         const PointedGSet& y);

}  // namespace equicat
