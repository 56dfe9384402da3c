#pragma once

#include <optional>

#include "equicat/igspace.hpp"
#include "equicat/report.hpp"

namespace equicat {

/// Functor on the trivial-representation site: a pointed set per dimension
/// up to the cap, with a based map per signed permutation. There are no
/// morphisms across dimensions.
struct ISpace {
  int dim_cap = 0;
  std::string name;
  std::vector<PointedSet> values;           // per dim
  std::vector<std::vector<int16_t>> morph;  // per dim: [f * size + x]

  int value_size(int d) const { return values[d].size(); }
  int map_apply(int d, int f, int x) const {
    return morph[d][static_cast<size_t>(f) * values[d].size() + x];
  }
};

/// Exhaustive functor-law validation; throws BadInput with a witness.
void validate_ispace(const ISpace& x);

/// Restriction to the trivial representations: the fiber over the trivial
/// group. Values of a lawful global family at trivial reps carry no
/// action, so the result is a plain I-space.
ISpace restrict_R(const GlobalSpace& a);

/// Single-group form; throws NonTrivialActionOnTrivialRep when the input
/// functor is broken.
ISpace restrict_R(const IGSpace& a);

/// Equivalence classes of pairs [s, x] under the relation generated by
/// [st, x] ~ [s, t_* x], computed by union-find. The canonical
/// representative of each class is its lexicographically least pair; the
/// class list is ordered by canonical representative.
struct KanResult {
  int vi = -1;                                     // target rep index
  int source_size = 0;                             // |X(R^d)|
  std::vector<std::pair<uint16_t, uint16_t>> classes;  // (s rank, x)
  std::vector<int32_t> class_of;                   // universe s*m+x -> class
  int base_class = 0;
  std::vector<int16_t> action;                     // |G| x classes
};

struct Extension {
  IGSpace space;
  std::vector<KanResult> per_rep;  // aligned with catalog reps of the group
};

/// Left Kan extension along the inclusion of trivial representations,
/// with the diagonal action g.[s, x] = [rho(g) s, x] installed and its
/// well-definedness on classes verified during construction.
Extension extend_E(const ISpace& x, const SiteCatalog& cat, int gi);

struct GlobalExtension {
  GlobalSpace space;
  std::vector<std::vector<KanResult>> kan;  // per group, per rep
};

/// Per-group extensions assembled into a global family. The quotient at a
/// rep depends only on its dimension, so the coherence bijections are
/// identities on class lists.
GlobalExtension extend_E_global(const ISpace& x, const SiteCatalog& cat);

/// Counit eps[s,a] = s_* phi_iota(a) with its explicit inverse
/// nu(a) = [i, phi_iota^{-1} i^{-1}_* a], as tables per (group, rep).
struct AdjunctionData {
  GlobalExtension era;  // E R A
  std::vector<std::vector<std::vector<int16_t>>> eps;  // [gi][ri][class]
  std::vector<std::vector<std::vector<int16_t>>> nu;   // [gi][ri][element]
};

AdjunctionData build_counit(const GlobalSpace& a);

/// Counit and unit verification for a global family: nu is an exact
/// two-sided inverse, eps is an equivariant natural transformation
/// compatible with phi, the unit is a bijection, and both triangle
/// identities hold pointwise.
Report check_adjunction(const GlobalSpace& a, const std::string& label);

/// Same battery driven from an I-space through its extension.
Report check_adjunction_ispace(const ISpace& x, const SiteCatalog& cat,
                               const std::string& label);

/// Triangle identities alone (also covered by the two drivers above).
Report check_triangles(const GlobalSpace& a, const std::string& label);
Report check_triangles_ispace(const ISpace& x, const SiteCatalog& cat,
                              const std::string& label);

/// Internal smash product: left Kan extension of the external smash along
/// direct sum, computed by union-find over decomposition pairs. Throws
/// CatalogIncomplete when some dimension split of a target rep has no
/// catalog pair.
IGSpace internal_smash(const IGSpace& a, const IGSpace& b);

/// Searches for an isomorphism of functor data: a based bijection per rep,
/// natural and equivariant, found by backtracking at one trivial rep per
/// dimension and propagated along invertible morphisms. Independent of the
/// canonical constructions it certifies.
std::optional<std::vector<std::vector<int16_t>>> find_natural_iso(
    const IGSpace& a, const IGSpace& b);

}  // namespace equicat
