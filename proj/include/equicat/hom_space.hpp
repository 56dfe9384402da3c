#pragma once

#include "equicat/rep.hpp"
#include "equicat/signed_perm.hpp"

namespace equicat {

/// Morphism space between representation objects, possibly over different
/// extents. When the dimensions agree the elements are all 2^n n! signed
/// permutations in lexicographic order; otherwise the space is empty (an
/// empty hom-space is a value, not an error). Carries the G x H conjugation
/// action (g,h).f = rho_W(h) f rho_V(g)^{-1}.
class HomSpace {
 public:
  HomSpace(Rep source, Rep target);

  const Rep& source() const { return source_; }
  const Rep& target() const { return target_; }
  int size() const { return count_; }
  const std::vector<SignedPerm>& elements() const;

  /// Index of (g,h).f within the element list.
  int action(int g, int h, int f) const {
    return tables_->compose(tables_->compose(tgt_rho_rank_[h], f),
                            src_rho_inv_rank_[g]);
  }

  /// Full action table, |G| x |H| x size, laid out [(g*|H|+h)*size+f].
  std::vector<uint16_t> action_table() const;

 private:
  Rep source_, target_;
  int count_;
  const HyperocTables* tables_ = nullptr;  // only set when count_ > 0
  std::vector<uint16_t> src_rho_inv_rank_, tgt_rho_rank_;
};

HomSpace hom_space(const Rep& v, const Rep& w);

/// Same-extent hom-space with the single diagonal conjugation action
/// g.f = (g,g).f; its fixed points are the equivariant morphisms.
class DiagonalHomSpace {
 public:
  DiagonalHomSpace(const Rep& v, const Rep& w);

  const HomSpace& underlying() const { return hom_; }
  int size() const { return hom_.size(); }
  int action(int g, int f) const { return hom_.action(g, g, f); }

 private:
  HomSpace hom_;
};

DiagonalHomSpace diagonal_hom(const Rep& v, const Rep& w);

}  // namespace equicat
