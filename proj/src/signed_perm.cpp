#include "equicat/signed_perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "equicat/error.hpp"

namespace equicat {

bool SignedPerm::is_identity() const {
  for (int i = 0; i < dim(); ++i)
    if (perm[i] != i || signs[i] != 1) return false;
  return true;
}

bool operator<(const SignedPerm& a, const SignedPerm& b) {
  if (a.perm != b.perm) return a.perm < b.perm;
  // +1 sorts before -1
  for (size_t i = 0; i < a.signs.size(); ++i)
    if (a.signs[i] != b.signs[i]) return a.signs[i] > b.signs[i];
  return false;
}

RatMatrix SignedPerm::to_matrix() const {
  RatMatrix m(dim(), dim());
  for (int i = 0; i < dim(); ++i) m(perm[i], i) = Rational(signs[i]);
  return m;
}

std::string SignedPerm::to_string() const {
  std::string s = "[";
  for (int i = 0; i < dim(); ++i) {
    if (i) s += ",";
    s += signs[i] < 0 ? "-" : "+";
    s += std::to_string(static_cast<int>(perm[i]));
  }
  return s + "]";
}

SignedPerm sp_identity(int dim) { return SignedPerm(dim); }

SignedPerm sp_compose(const SignedPerm& f, const SignedPerm& g) {
  if (f.dim() != g.dim())
    throw Error(ErrorCode::DimMismatch, "sp_compose: dimensions differ");
  SignedPerm r(f.dim());
  for (int i = 0; i < f.dim(); ++i) {
    r.perm[i] = f.perm[g.perm[i]];
    r.signs[i] = static_cast<int8_t>(g.signs[i] * f.signs[g.perm[i]]);
  }
  return r;
}

SignedPerm sp_inverse(const SignedPerm& f) {
  SignedPerm r(f.dim());
  for (int i = 0; i < f.dim(); ++i) {
    r.perm[f.perm[i]] = static_cast<int8_t>(i);
    r.signs[f.perm[i]] = f.signs[i];
  }
  return r;
}

SignedPerm sp_block_sum(const SignedPerm& f, const SignedPerm& g) {
  const int n = f.dim(), m = g.dim();
  SignedPerm r(n + m);
  for (int i = 0; i < n; ++i) {
    r.perm[i] = f.perm[i];
    r.signs[i] = f.signs[i];
  }
  for (int j = 0; j < m; ++j) {
    r.perm[n + j] = static_cast<int8_t>(n + g.perm[j]);
    r.signs[n + j] = g.signs[j];
  }
  return r;
}

std::vector<int8_t> sp_apply(const SignedPerm& f,
                             const std::vector<int8_t>& sign_vec) {
  std::vector<int8_t> out(f.dim());
  for (int i = 0; i < f.dim(); ++i)
    out[f.perm[i]] = static_cast<int8_t>(f.signs[i] * sign_vec[i]);
  return out;
}

namespace {

std::vector<SignedPerm> enumerate_signed_perms(int dim) {
  std::vector<SignedPerm> out;
  std::vector<int8_t> p(dim);
  for (int i = 0; i < dim; ++i) p[i] = static_cast<int8_t>(i);
  do {
    // sign patterns in lex order: all +1 first, bit set means -1
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
      SignedPerm f(dim);
      f.perm = p;
      for (int i = 0; i < dim; ++i)
        f.signs[i] = (mask >> (dim - 1 - i)) & 1u ? -1 : 1;
      out.push_back(std::move(f));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct PermCache {
  std::map<int, std::vector<SignedPerm>> elems;
  std::map<int, HyperocTables> tables;
  std::mutex mu;
};

PermCache& perm_cache() {
  static PermCache c;
  return c;
}

}  // namespace

const std::vector<SignedPerm>& all_signed_perms(int dim) {
  PermCache& c = perm_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.elems.find(dim);
  if (it == c.elems.end())
    it = c.elems.emplace(dim, enumerate_signed_perms(dim)).first;
  return it->second;
}

int sp_lex_rank(const SignedPerm& f) {
  const int n = f.dim();
  // Lehmer code for the permutation part, then the sign bits.
  int perm_rank = 0;
  int factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  int remaining = factorial;
  for (int i = 0; i < n; ++i) {
    remaining /= (n - i);
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (f.perm[j] < f.perm[i]) ++smaller;
    perm_rank += smaller * remaining;
  }
  int sign_rank = 0;
  for (int i = 0; i < n; ++i)
    sign_rank = (sign_rank << 1) | (f.signs[i] < 0 ? 1 : 0);
  return perm_rank * (1 << n) + sign_rank;
}

const HyperocTables& hyperoc_tables(int dim) {
  {
    PermCache& c = perm_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.tables.find(dim);
    if (it != c.tables.end()) return it->second;
  }
  const std::vector<SignedPerm>& elems = all_signed_perms(dim);
  HyperocTables t;
  t.dim = dim;
  t.order = static_cast<int>(elems.size());
  t.mult.resize(static_cast<size_t>(t.order) * t.order);
  t.inv.resize(t.order);
  for (int a = 0; a < t.order; ++a) {
    for (int b = 0; b < t.order; ++b) {
      int r = sp_lex_rank(sp_compose(elems[a], elems[b]));
      t.mult[static_cast<size_t>(a) * t.order + b] = static_cast<uint16_t>(r);
    }
    t.inv[a] = static_cast<uint16_t>(sp_lex_rank(sp_inverse(elems[a])));
  }
  t.identity_rank = sp_lex_rank(sp_identity(dim));
  PermCache& c = perm_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  return c.tables.emplace(dim, std::move(t)).first->second;
}

bool sp_has_negative_cycle(const SignedPerm& f) {
  const int n = f.dim();
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int prod = 1;
    int j = i;
    do {
      seen[j] = true;
      prod *= f.signs[j];
      j = f.perm[j];
    } while (j != i);
    if (prod < 0) return true;
  }
  return false;
}

int sp_cycle_count(const SignedPerm& f) {
  const int n = f.dim();
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    int j = i;
    do {
      seen[j] = true;
      j = f.perm[j];
    } while (j != i);
  }
  return cycles;
}

}  // namespace equicat
