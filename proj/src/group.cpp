#include "equicat/group.hpp"

#include <algorithm>
#include <set>

#include "equicat/error.hpp"

namespace equicat {

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != identity) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::vector<int> FiniteGroup::cyclic_subgroup(int a) const {
  std::vector<int> out{identity};
  int x = a;
  while (x != identity) {
    out.push_back(x);
    x = mul(x, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(identity)) return false;
  for (int a : s) {
    if (!s.count(inv(a))) return false;
    for (int b : s)
      if (!s.count(mul(a, b))) return false;
  }
  return true;
}

bool GroupHom::is_identity_hom() const {
  if (source.get() != target.get()) return false;
  for (int a = 0; a < source->order; ++a)
    if (image[a] != a) return false;
  return true;
}

GroupPtr group_from_table(const std::vector<std::vector<int>>& table,
                          const std::string& name,
                          std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::BadInput, "group " + name + ": empty table");
  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->name = name;
  g->table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorCode::BadInput, "group " + name + ": table not square");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n)
        throw Error(ErrorCode::BadInput,
                    "group " + name + ": table entry out of range at (" +
                        std::to_string(a) + "," + std::to_string(b) + ")");
      g->table[a * n + b] = v;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
          throw Error(ErrorCode::NotAssociative,
                      "group " + name + ": (ab)c != a(bc) for triple (" +
                          std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")");
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = g->mul(e, a) == a && g->mul(a, e) == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0)
    throw Error(ErrorCode::NoIdentity, "group " + name + ": no two-sided identity");
  g->identity = identity;
  g->inverses.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) == identity && g->mul(b, a) == identity) {
        g->inverses[a] = b;
        break;
      }
    if (g->inverses[a] < 0)
      throw Error(ErrorCode::NoInverse,
                  "group " + name + ": element " + std::to_string(a) +
                      " has no two-sided inverse");
  }
  if (labels.empty()) {
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  if (static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::BadInput, "group " + name + ": label count mismatch");
  g->labels = std::move(labels);
  return g;
}

ProductGroup group_product(const GroupPtr& g, const GroupPtr& h) {
  const int n = g->order, m = h->order;
  std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n) * m);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < m; ++x)
      labels.push_back("(" + g->labels[a] + "," + h->labels[x] + ")");
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < m; ++x)
      for (int b = 0; b < n; ++b)
        for (int y = 0; y < m; ++y)
          table[a * m + x][b * m + y] = g->mul(a, b) * m + h->mul(x, y);
  ProductGroup out;
  out.group = group_from_table(table, g->name + "x" + h->name, labels);
  std::vector<int> p1(n * m), p2(n * m), e1(n), e2(m);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < m; ++x) {
      p1[a * m + x] = a;
      p2[a * m + x] = x;
    }
  for (int a = 0; a < n; ++a) e1[a] = a * m + h->identity;
  for (int x = 0; x < m; ++x) e2[x] = g->identity * m + x;
  out.proj1 = make_hom(out.group, g, p1, "proj1");
  out.proj2 = make_hom(out.group, h, p2, "proj2");
  out.embed1 = make_hom(g, out.group, e1, "embed1");
  out.embed2 = make_hom(h, out.group, e2, "embed2");
  return out;
}

GroupHom diagonal_hom_into_product(const GroupPtr& g, const ProductGroup& gg) {
  std::vector<int> image(g->order);
  for (int a = 0; a < g->order; ++a)
    image[a] = gg.group->mul(gg.embed1(a), gg.embed2(a));
  return make_hom(g, gg.group, image, "diag");
}

GroupHom make_hom(const GroupPtr& source, const GroupPtr& target,
                  std::vector<int> image, std::string name) {
  if (static_cast<int>(image.size()) != source->order)
    throw Error(ErrorCode::BadInput, "hom " + name + ": image size mismatch");
  for (int v : image)
    if (v < 0 || v >= target->order)
      throw Error(ErrorCode::BadInput, "hom " + name + ": image out of range");
  if (image[source->identity] != target->identity)
    throw Error(ErrorCode::ValidationFailed,
                "hom " + name + ": identity not sent to identity");
  for (int a = 0; a < source->order; ++a)
    for (int b = 0; b < source->order; ++b)
      if (image[source->mul(a, b)] != target->mul(image[a], image[b]))
        throw Error(ErrorCode::ValidationFailed,
                    "hom " + name + ": image(ab) != image(a)image(b) at (" +
                        std::to_string(a) + "," + std::to_string(b) + ")");
  GroupHom h;
  h.source = source;
  h.target = target;
  h.image = std::move(image);
  h.name = std::move(name);
  return h;
}

std::vector<GroupHom> enumerate_homs(const GroupPtr& source,
                                     const GroupPtr& target) {
  const int n = source->order, m = target->order;
  std::vector<GroupHom> out;
  std::vector<int> image(n, 0);
  // iterate all m^n maps in lexicographic order
  while (true) {
    bool ok = image[source->identity] == target->identity;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = image[source->mul(a, b)] == target->mul(image[a], image[b]);
    if (ok) {
      GroupHom h;
      h.source = source;
      h.target = target;
      h.image = image;
      h.name = source->name + "->" + target->name + "#" +
               std::to_string(out.size());
      out.push_back(std::move(h));
    }
    int i = n - 1;
    while (i >= 0 && image[i] == m - 1) image[i--] = 0;
    if (i < 0) break;
    ++image[i];
  }
  return out;
}

GroupHom compose_homs(const GroupHom& second, const GroupHom& first) {
  if (first.target.get() != second.source.get())
    throw Error(ErrorCode::ExtentMismatch, "compose_homs: extents differ");
  std::vector<int> image(first.source->order);
  for (int a = 0; a < first.source->order; ++a)
    image[a] = second.image[first.image[a]];
  GroupHom h;
  h.source = first.source;
  h.target = second.target;
  h.image = std::move(image);
  h.name = second.name + "." + first.name;
  return h;
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<int> image(g->order);
  for (int a = 0; a < g->order; ++a) image[a] = a;
  GroupHom h;
  h.source = g;
  h.target = g;
  h.image = std::move(image);
  h.name = "id_" + g->name;
  return h;
}

std::vector<std::vector<int>> cyclic_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.order; ++a) {
    std::vector<int> sub = g.cyclic_subgroup(a);
    if (std::find(out.begin(), out.end(), sub) == out.end())
      out.push_back(std::move(sub));
  }
  return out;
}

GroupPtr trivial_group() { return group_from_table({{0}}, "e", {"e"}); }

GroupPtr cyclic_group(int n, const std::string& name) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    labels.push_back(a == 0 ? "e" : "g" + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return group_from_table(table, name, labels);
}

namespace {

std::vector<int> compose_perm3(const std::vector<int>& f,
                               const std::vector<int>& g) {
  return {f[g[0]], f[g[1]], f[g[2]]};
}

}  // namespace

GroupPtr symmetric_3() {
  // elements as permutations of {0,1,2}, listed identity-first
  const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> labels = {"e",    "s01",  "s02",
                                           "s12",  "r120", "r240"};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c = compose_perm3(perms[a], perms[b]);
      int idx = -1;
      for (int k = 0; k < 6; ++k)
        if (perms[k] == c) idx = k;
      table[a][b] = idx;
    }
  return group_from_table(table, "S3", labels);
}

}  // namespace equicat
