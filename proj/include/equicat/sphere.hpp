#pragma once

#include "equicat/igspace.hpp"
#include "equicat/rep.hpp"

namespace equicat {

/// Sign-vector model of the one-point compactification: the value at an
/// n-dimensional rep is the pointed set of 2^n sign vectors, with g acting
/// through the signed permutation rho(g).
PointedGSet sphere_gset(const Rep& v);

/// Index of a sign vector inside sphere_gset (basepoint is index 0).
int sphere_index(const std::vector<int8_t>& sign_vec);
std::vector<int8_t> sphere_vector(int dim, int index);

/// The based map S(V) -> S(W) induced by a hom-space element.
PointedMap sphere_map(const SignedPerm& f);

/// Concatenation bijection S(V) ^ S(W) -> S(V (+) W); the strong monoidal
/// structure of the sign-vector sphere. Strictly associative and unital.
PointedMap sphere_smash_iso(const Rep& v, const Rep& w);

/// Sphere as functor data over one group, and as a global family with
/// identity coherence bijections.
IGSpace sphere_igspace(const SiteCatalog& cat, int gi);
GlobalSpace sphere_global(const SiteCatalog& cat);

/// Constant functor at a fixed pointed set with trivial action; every
/// morphism goes to the identity.
IGSpace constant_igspace(const SiteCatalog& cat, int gi, const PointedSet& value);
GlobalSpace constant_global(const SiteCatalog& cat, const PointedSet& value);

/// V -> X0 ^ S(V) with identity coherence bijections. With X0 = S^0 this
/// is the global sphere.
IGSpace suspension_igspace(const SiteCatalog& cat, int gi, const PointedSet& x0);
GlobalSpace suspension_global(const SiteCatalog& cat, const PointedSet& x0);

/// Monoidal unit for the internal smash: S^0 concentrated at dimension 0.
IGSpace unit_igspace(const SiteCatalog& cat, int gi);

/// Pointed set helpers for test instances.
PointedSet pointed_set_of_size(int n);  // basepoint plus n-1 labeled points
PointedGSet trivial_gset(const GroupPtr& g, const PointedSet& s,
                         const std::string& name);

}  // namespace equicat
