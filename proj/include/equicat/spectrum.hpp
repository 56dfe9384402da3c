#pragma once

#include <optional>

#include "equicat/igspace.hpp"
#include "equicat/report.hpp"

namespace equicat {

/// Index of the sigma/mult component list: catalog rep pairs with dim sum
/// within the cap.
struct PairIndex {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> pos;  // vi*nreps+wi -> position or -1

  int at(int vi, int wi, int nreps) const { return pos[vi * nreps + wi]; }
};

PairIndex spectrum_pair_index(const SiteCatalog& cat, int gi);

/// Sphere action on functor data: one based map
/// sigma_(V,W): A(V) ^ S(W) -> A(V (+) W) per in-cap pair. Domain elements
/// are indexed by the smash of the base object at V with the sign-vector
/// sphere at W.
struct Spectrum {
  const IGSpace* base = nullptr;
  std::string name;
  PairIndex idx;
  std::vector<PointedGSet> sphere_at;           // sphere gset per rep index
  std::vector<std::vector<int16_t>> sigma;      // per pair

  int gi() const { return base->gi; }
};

/// sigma = the concatenation isomorphism S(V) ^ S(W) -> S(V (+) W).
Spectrum sphere_spectrum(const IGSpace& sphere_base);

/// sigma for V -> X0 ^ S(V): pair the sign vectors, leave X0 alone.
Spectrum suspension_spectrum(const IGSpace& susp_base, const PointedSet& x0);

/// Unit, associativity, naturality, and equivariance of the action.
Report check_spectrum(const Spectrum& spec);

struct GlobalSpectrum {
  const GlobalSpace* base = nullptr;
  std::vector<Spectrum> per_group;
};

GlobalSpectrum sphere_global_spectrum(const GlobalSpace& sphere);

/// Per-component spectrum axioms plus compatibility of sigma with the
/// coherence bijections and the sphere restriction identity.
Report check_global_spectrum(const GlobalSpectrum& gs);

/// Lax monoidal data: unit S -> A and multiplication
/// A(V) ^ A(W) -> A(V (+) W), all components checked rather than assumed.
struct LaxMonoidal {
  const IGSpace* base = nullptr;
  std::string name;
  std::vector<std::vector<int16_t>> unit;   // per rep: S(V) -> A(V)
  PairIndex idx;
  std::vector<PointedGSet> sphere_at;
  std::vector<std::vector<int16_t>> mult;   // per pair: A(V)^A(W) -> A(V(+)W)
};

LaxMonoidal sphere_lax(const IGSpace& sphere_base);

/// Unit and multiplication coherence: equivariance, naturality,
/// associativity, unitality.
Report check_lax(const LaxMonoidal& lax);

/// sigma = mu o (id ^ unit); lax failures surface in the report and no
/// spectrum is produced.
std::optional<Spectrum> spectrum_from_lax(const LaxMonoidal& lax,
                                          Report& report);

/// Restriction identity of the sign-vector sphere: alpha* S(V) and
/// S(alpha* V) have identical tables for every catalog hom and rep.
Report check_sphere_restriction(const SiteCatalog& cat);

/// Fixed-point cross-oracle: for every catalog rep and cyclic subgroup,
/// the number of non-base sign vectors fixed by the generator equals
/// 2^(fixed-subspace dimension) when no cycle is negative, else zero. The
/// two sides come from independent routes (table enumeration vs exact
/// averaging-projector rank).
Report check_sphere_fixed_points(const SiteCatalog& cat);

}  // namespace equicat
