#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equicat/gset.hpp"
#include "equicat/group.hpp"
#include "equicat/rep.hpp"

namespace equicat {

/// Truncated finite site: the groups, the homomorphisms between them, and
/// per-group representation lists, everything of dimension <= dim_cap.
/// Rep lists are closed under restriction along catalog homs and direct
/// sum within the cap, so functor data indexed by the catalog is closed
/// under the operations the checkers exercise.
class SiteCatalog {
 public:
  std::string name;
  int dim_cap = 3;
  std::vector<GroupPtr> groups;
  std::vector<GroupHom> homs;
  std::vector<std::vector<Rep>> reps;       // per group index
  std::vector<std::vector<PointedGSet>> gsets;  // per group index

  int group_count() const { return static_cast<int>(groups.size()); }
  int group_index(const std::string& gname) const;
  int group_index(const GroupPtr& g) const;

  const Rep& rep(int gi, int ri) const { return reps[gi][ri]; }
  int rep_count(int gi) const { return static_cast<int>(reps[gi].size()); }

  /// Index of a rep with identical data, or -1.
  int rep_index(int gi, const Rep& data) const;
  int rep_index_by_label(int gi, const std::string& label) const;

  int hom_index(const std::string& hname) const;

  /// For homs[k]: G -> H and rep index vi over H, the index over G of the
  /// restricted rep. Filled during finalize; closure guarantees presence.
  int restricted_rep_index(int hom_idx, int vi) const {
    return restricted_idx_[hom_idx][vi];
  }

  /// Index over gi of reps[gi][vi] (+) reps[gi][wi], or -1 when the sum
  /// exceeds dim_cap.
  int sum_rep_index(int gi, int vi, int wi) const {
    int d = reps[gi][vi].dim + reps[gi][wi].dim;
    if (d > dim_cap) return -1;
    return sum_idx_[gi][vi * rep_count(gi) + wi];
  }

  int trivial_rep_index(int gi, int dim) const { return trivial_idx_[gi][dim]; }

  /// For homs[a]: S -> T and homs[b]: T -> U, the index of the composite
  /// hom S -> U; -1 when the pair is not composable. Catalog homs are
  /// validated to be composition-closed.
  int composite_hom_index(int a, int b) const {
    return comp_idx_[a * static_cast<int>(homs.size()) + b];
  }

  /// Index of the unique homomorphism gi -> trivial group.
  int hom_to_trivial(int gi) const { return to_trivial_hom_[gi]; }
  int trivial_group_index() const { return trivial_group_idx_; }

  /// Same-dimension rep index pairs (vi, wi) for one group; the nonempty
  /// hom-space pairs.
  const std::vector<std::pair<int, int>>& same_dim_pairs(int gi) const {
    return same_dim_pairs_[gi];
  }

  void finalize();  // builds the derived index tables

 private:
  std::vector<std::vector<int>> restricted_idx_;
  std::vector<std::vector<int>> sum_idx_;
  std::vector<std::vector<int>> trivial_idx_;
  std::vector<std::vector<std::pair<int, int>>> same_dim_pairs_;
  std::vector<int> to_trivial_hom_;
  std::vector<int> comp_idx_;
  int trivial_group_idx_ = -1;
};

struct CatalogSpec {
  std::string name = "catalog";
  int dim_cap = 3;
  std::vector<GroupPtr> groups;
  /// When absent, all homomorphisms between catalog groups are enumerated.
  std::optional<std::vector<GroupHom>> homs;
  std::vector<Rep> seed_reps;
  std::vector<PointedGSet> gsets;
  /// Close rep lists under restriction and direct sum (within dim_cap).
  bool close_reps = true;
};

/// Builds and validates a catalog: trivial reps of every dimension up to
/// the cap are always present; seed reps beyond the cap are rejected.
SiteCatalog build_catalog(const CatalogSpec& spec);

/// The shipped desk-scale catalog: groups {e, C2, C3, C2xC2, S3}, all
/// homomorphisms, seed reps (sign of C2, sign of S3, coordinate
/// permutation rep of S3) closed under restriction and sum, dim_cap 3,
/// and a squad of small pointed G-sets.
SiteCatalog standard_catalog(int dim_cap = 3);

}  // namespace equicat
