#include "equicat/rep.hpp"

#include "equicat/error.hpp"
#include "equicat/matrix.hpp"

namespace equicat {

Rep make_rep(GroupPtr group, int dim, std::vector<SignedPerm> rho,
             std::string label) {
  if (static_cast<int>(rho.size()) != group->order)
    throw Error(ErrorCode::BadInput,
                "rep " + label + ": one signed permutation per element required");
  for (const SignedPerm& f : rho)
    if (f.dim() != dim)
      throw Error(ErrorCode::BadInput, "rep " + label + ": dimension mismatch");
  if (!rho[group->identity].is_identity())
    throw Error(ErrorCode::ValidationFailed,
                "rep " + label + ": identity element not sent to identity");
  for (int a = 0; a < group->order; ++a)
    for (int b = 0; b < group->order; ++b)
      if (rho[group->mul(a, b)] != sp_compose(rho[a], rho[b]))
        throw Error(ErrorCode::ValidationFailed,
                    "rep " + label + ": rho(ab) != rho(a)rho(b) at (" +
                        group->labels[a] + "," + group->labels[b] + ")");
  Rep r;
  r.group = std::move(group);
  r.dim = dim;
  r.rho = std::move(rho);
  r.label = std::move(label);
  return r;
}

Rep trivial_rep(const GroupPtr& group, int dim) {
  std::vector<SignedPerm> rho(group->order, sp_identity(dim));
  Rep r;
  r.group = group;
  r.dim = dim;
  r.rho = std::move(rho);
  r.label = "triv" + std::to_string(dim);
  return r;
}

Rep rep_restrict(const GroupHom& alpha, const Rep& v) {
  if (v.group.get() != alpha.target.get())
    throw Error(ErrorCode::ExtentMismatch,
                "rep_restrict: rep extent is not the hom target");
  Rep r;
  r.group = alpha.source;
  r.dim = v.dim;
  r.rho.reserve(alpha.source->order);
  for (int a = 0; a < alpha.source->order; ++a) r.rho.push_back(v.rho[alpha(a)]);
  r.label = alpha.name + "*" + v.label;
  return r;
}

Rep rep_direct_sum(const Rep& v, const Rep& w) {
  if (v.group.get() != w.group.get())
    throw Error(ErrorCode::ExtentMismatch, "rep_direct_sum: extents differ");
  Rep r;
  r.group = v.group;
  r.dim = v.dim + w.dim;
  r.rho.reserve(v.group->order);
  for (int a = 0; a < v.group->order; ++a)
    r.rho.push_back(sp_block_sum(v.rho[a], w.rho[a]));
  r.label = v.label + "+" + w.label;
  return r;
}

int fixed_subspace_dim(const Rep& rep, const std::vector<int>& subgroup) {
  if (!rep.group->is_subgroup(subgroup))
    throw Error(ErrorCode::NotASubgroup,
                "fixed_subspace_dim: element list is not a subgroup");
  RatMatrix sum(rep.dim, rep.dim);
  for (int h : subgroup) sum = sum + rep.rho[h].to_matrix();
  RatMatrix projector =
      sum.scaled(Rational(BigInt(1), BigInt(static_cast<long long>(subgroup.size()))));
  return static_cast<int>(projector.rank());
}

}  // namespace equicat
