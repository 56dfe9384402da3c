#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equicat/matrix.hpp"

namespace equicat {

/// Element of the hyperoctahedral group B_n: the matrix sending basis
/// vector e_i to signs[i] * e_{perm[i]}. These are the model's stand-in
/// for linear isometric isomorphisms.
struct SignedPerm {
  std::vector<int8_t> perm;   // bijection on [0, n)
  std::vector<int8_t> signs;  // entries +1 / -1

  SignedPerm() = default;
  explicit SignedPerm(int dim)
      : perm(dim), signs(dim, 1) {
    for (int i = 0; i < dim; ++i) perm[i] = static_cast<int8_t>(i);
  }

  int dim() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.perm == b.perm && a.signs == b.signs;
  }
  friend bool operator!=(const SignedPerm& a, const SignedPerm& b) {
    return !(a == b);
  }
  /// Lexicographic on (perm, signs) with +1 before -1; the canonical
  /// enumeration and all reports use this order.
  friend bool operator<(const SignedPerm& a, const SignedPerm& b);

  RatMatrix to_matrix() const;
  std::string to_string() const;
};

SignedPerm sp_identity(int dim);

/// Matrix product f*g (apply g first). Throws DimMismatch.
SignedPerm sp_compose(const SignedPerm& f, const SignedPerm& g);
SignedPerm sp_inverse(const SignedPerm& f);

/// Block-diagonal direct sum: f on the first coordinates, g on the rest.
SignedPerm sp_block_sum(const SignedPerm& f, const SignedPerm& g);

/// Image of a sign vector (entries +1/-1) under the matrix.
std::vector<int8_t> sp_apply(const SignedPerm& f,
                             const std::vector<int8_t>& sign_vec);

/// All 2^n * n! signed permutations of the given dimension in lexicographic
/// order. Dimension 0 yields the single empty permutation.
const std::vector<SignedPerm>& all_signed_perms(int dim);

/// Position of f in all_signed_perms(f.dim()).
int sp_lex_rank(const SignedPerm& f);

/// Cached multiplication/inverse tables for B_n; lets hot loops compose by
/// table lookup instead of building vectors.
struct HyperocTables {
  int dim = 0;
  int order = 0;
  std::vector<uint16_t> mult;  // order x order, mult[a*order+b] = rank(a*b)
  std::vector<uint16_t> inv;
  int identity_rank = 0;

  uint16_t compose(int a, int b) const { return mult[a * order + b]; }
};

const HyperocTables& hyperoc_tables(int dim);

/// True when some cycle of the permutation carries an odd number of -1
/// signs; such an element fixes no sign vector.
bool sp_has_negative_cycle(const SignedPerm& f);

/// Number of cycles of the underlying permutation.
int sp_cycle_count(const SignedPerm& f);

}  // namespace equicat
