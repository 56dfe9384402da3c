#pragma once

#include <string>
#include <vector>

#include "equicat/group.hpp"
#include "equicat/signed_perm.hpp"

namespace equicat {

/// Object of the finite model of I_G: a dimension together with a
/// homomorphism of the extent group into signed permutations. The signed
/// permutations stand in for O(n); that choice is a declared model, not
/// the continuous category.
struct Rep {
  GroupPtr group;  // the extent
  int dim = 0;
  std::vector<SignedPerm> rho;  // indexed by group element
  std::string label;

  const SignedPerm& act(int g) const { return rho[g]; }

  friend bool operator==(const Rep& a, const Rep& b) {
    return a.group.get() == b.group.get() && a.dim == b.dim && a.rho == b.rho;
  }
  friend bool operator!=(const Rep& a, const Rep& b) { return !(a == b); }
};

/// Validates the homomorphism law rho[ab] = rho[a] rho[b] and the identity;
/// throws BadInput with the offending pair.
Rep make_rep(GroupPtr group, int dim, std::vector<SignedPerm> rho,
             std::string label);

Rep trivial_rep(const GroupPtr& group, int dim);

/// Precomposition with alpha: same dimension, rho' = rho o alpha.
/// Requires v.group == alpha.target.
Rep rep_restrict(const GroupHom& alpha, const Rep& v);

/// Blockwise direct sum of two representations over the same extent.
Rep rep_direct_sum(const Rep& v, const Rep& w);

/// Rank of the averaging projector (1/|H|) sum of rho(h) over the subgroup,
/// by exact Gaussian elimination. Throws NotASubgroup.
int fixed_subspace_dim(const Rep& rep, const std::vector<int>& subgroup);

}  // namespace equicat
