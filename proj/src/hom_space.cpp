#include "equicat/hom_space.hpp"

#include "equicat/error.hpp"

namespace equicat {

namespace {
const std::vector<SignedPerm>& empty_perm_list() {
  static const std::vector<SignedPerm> empty;
  return empty;
}
}  // namespace

HomSpace::HomSpace(Rep source, Rep target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.dim != target_.dim) {
    count_ = 0;
    return;
  }
  tables_ = &hyperoc_tables(source_.dim);
  count_ = tables_->order;
  src_rho_inv_rank_.reserve(source_.group->order);
  for (const SignedPerm& f : source_.rho)
    src_rho_inv_rank_.push_back(static_cast<uint16_t>(sp_lex_rank(sp_inverse(f))));
  tgt_rho_rank_.reserve(target_.group->order);
  for (const SignedPerm& f : target_.rho)
    tgt_rho_rank_.push_back(static_cast<uint16_t>(sp_lex_rank(f)));
}

const std::vector<SignedPerm>& HomSpace::elements() const {
  if (count_ == 0) return empty_perm_list();
  return all_signed_perms(source_.dim);
}

std::vector<uint16_t> HomSpace::action_table() const {
  const int ng = source_.group->order, nh = target_.group->order;
  std::vector<uint16_t> table(static_cast<size_t>(ng) * nh * count_);
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h)
      for (int f = 0; f < count_; ++f)
        table[(static_cast<size_t>(g) * nh + h) * count_ + f] =
            static_cast<uint16_t>(action(g, h, f));
  return table;
}

HomSpace hom_space(const Rep& v, const Rep& w) { return HomSpace(v, w); }

DiagonalHomSpace::DiagonalHomSpace(const Rep& v, const Rep& w) : hom_(v, w) {
  if (v.group.get() != w.group.get())
    throw Error(ErrorCode::ExtentMismatch, "diagonal_hom: extents differ");
}

DiagonalHomSpace diagonal_hom(const Rep& v, const Rep& w) {
  return DiagonalHomSpace(v, w);
}

}  // namespace equicat
