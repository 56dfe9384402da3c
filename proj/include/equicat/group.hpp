#pragma once

#include <memory>
#include <string>
#include <vector>

namespace equicat {

/// Finite group given by its full multiplication table. Immutable after
/// validated construction.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;  // order x order, table[a*order+b] = a*b
  int identity = 0;
  std::vector<int> inverses;
  std::string name;
  std::vector<std::string> labels;  // one per element

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverses[a]; }

  /// Order of an element by iteration.
  int element_order(int a) const;

  /// Elements of the cyclic subgroup generated by a, sorted.
  std::vector<int> cyclic_subgroup(int a) const;

  /// True if the element list is closed under product and inverse and
  /// contains the identity.
  bool is_subgroup(const std::vector<int>& elems) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Homomorphism between validated groups, stored as the full element map.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;  // image[a] in target
  std::string name;

  int operator()(int a) const { return image[a]; }
  bool is_identity_hom() const;
};

/// Validates a multiplication table: locates the two-sided identity and
/// inverses, checks associativity exhaustively. Throws NotAssociative /
/// NoIdentity / NoInverse naming the offending element or triple.
GroupPtr group_from_table(const std::vector<std::vector<int>>& table,
                          const std::string& name,
                          std::vector<std::string> labels = {});

/// Direct product with componentwise multiplication, plus the structure
/// homomorphisms into and out of it.
struct ProductGroup {
  GroupPtr group;
  GroupHom proj1, proj2;    // G x H -> G, G x H -> H
  GroupHom embed1, embed2;  // G -> G x H, H -> G x H
};

ProductGroup group_product(const GroupPtr& g, const GroupPtr& h);

/// Diagonal homomorphism G -> G x G for a product built from equal factors.
GroupHom diagonal_hom_into_product(const GroupPtr& g, const ProductGroup& gg);

/// Validates that image defines a homomorphism. Throws BadInput otherwise.
GroupHom make_hom(const GroupPtr& source, const GroupPtr& target,
                  std::vector<int> image, std::string name);

/// All homomorphisms source -> target by exhaustive search over element
/// maps, in lexicographic order of the image tuple.
std::vector<GroupHom> enumerate_homs(const GroupPtr& source,
                                     const GroupPtr& target);

GroupHom compose_homs(const GroupHom& second, const GroupHom& first);
GroupHom identity_hom(const GroupPtr& g);

/// Distinct cyclic subgroups of g, each sorted, in first-generator order.
std::vector<std::vector<int>> cyclic_subgroups(const FiniteGroup& g);

/// Standard small groups used by the test suite and shipped catalogs.
GroupPtr trivial_group();
GroupPtr cyclic_group(int n, const std::string& name);
GroupPtr symmetric_3();

}  // namespace equicat
