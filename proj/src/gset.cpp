#include "equicat/gset.hpp"

#include "equicat/error.hpp"

namespace equicat {

bool PointedGSet::has_trivial_action() const {
  for (int g = 0; g < group->order; ++g)
    for (int x = 0; x < size(); ++x)
      if (act(g, x) != x) return false;
  return true;
}

PointedGSet make_pointed_gset(GroupPtr group,
                              std::vector<std::string> elements, int basepoint,
                              std::vector<int> action, std::string name) {
  const int n = static_cast<int>(elements.size());
  if (n == 0 || basepoint < 0 || basepoint >= n)
    throw Error(ErrorCode::BadInput, "gset " + name + ": bad basepoint");
  if (static_cast<int>(action.size()) != group->order * n)
    throw Error(ErrorCode::BadInput, "gset " + name + ": action table size");
  PointedGSet s;
  s.group = std::move(group);
  s.elements = std::move(elements);
  s.basepoint = basepoint;
  s.action = std::move(action);
  s.name = std::move(name);
  for (int g = 0; g < s.group->order; ++g) {
    if (s.act(g, basepoint) != basepoint)
      throw Error(ErrorCode::ValidationFailed,
                  "gset " + s.name + ": basepoint moved by element " +
                      s.group->labels[g]);
    for (int x = 0; x < n; ++x) {
      int v = s.act(g, x);
      if (v < 0 || v >= n)
        throw Error(ErrorCode::BadInput, "gset " + s.name + ": action out of range");
    }
  }
  for (int x = 0; x < n; ++x)
    if (s.act(s.group->identity, x) != x)
      throw Error(ErrorCode::ValidationFailed,
                  "gset " + s.name + ": identity acts nontrivially");
  for (int g = 0; g < s.group->order; ++g)
    for (int h = 0; h < s.group->order; ++h)
      for (int x = 0; x < n; ++x)
        if (s.act(s.group->mul(g, h), x) != s.act(g, s.act(h, x)))
          throw Error(ErrorCode::ValidationFailed,
                      "gset " + s.name + ": action law fails at (" +
                          s.group->labels[g] + "," + s.group->labels[h] + ")");
  return s;
}

PointedGSet s0_gset(const GroupPtr& group) {
  std::vector<int> action(2 * group->order);
  for (int g = 0; g < group->order; ++g) {
    action[g * 2] = 0;
    action[g * 2 + 1] = 1;
  }
  return make_pointed_gset(group, {"*", "pt"}, 0, std::move(action), "S0");
}

PointedGSet one_point_gset(const GroupPtr& group) {
  return make_pointed_gset(group, {"*"}, 0,
                           std::vector<int>(group->order, 0), "pt");
}

PointedMap identity_map(int size) {
  PointedMap f;
  f.map.resize(size);
  for (int i = 0; i < size; ++i) f.map[i] = i;
  return f;
}

PointedMap compose_maps(const PointedMap& second, const PointedMap& first) {
  PointedMap f;
  f.map.resize(first.size());
  for (int i = 0; i < first.size(); ++i) f.map[i] = second(first(i));
  return f;
}

bool is_based(const PointedMap& f, int source_base, int target_base) {
  return f(source_base) == target_base;
}

bool is_equivariant(const PointedMap& f, const PointedGSet& x,
                    const PointedGSet& y) {
  for (int g = 0; g < x.group->order; ++g)
    for (int xi = 0; xi < x.size(); ++xi)
      if (f(x.act(g, xi)) != y.act(g, f(xi))) return false;
  return true;
}

PointedGSet smash(const PointedGSet& x, const PointedGSet& y) {
  if (x.group.get() != y.group.get())
    throw Error(ErrorCode::ExtentMismatch, "smash: extents differ");
  PointedGSet s;
  s.group = x.group;
  s.name = x.name + "^" + y.name;
  s.elements.push_back("*");
  s.basepoint = 0;
  for (int xi = 0; xi < x.size(); ++xi) {
    if (xi == x.basepoint) continue;
    for (int yi = 0; yi < y.size(); ++yi) {
      if (yi == y.basepoint) continue;
      s.elements.push_back("(" + x.elements[xi] + "," + y.elements[yi] + ")");
    }
  }
  const int n = s.size();
  s.action.resize(x.group->order * n);
  for (int g = 0; g < x.group->order; ++g) {
    s.action[g * n] = 0;
    for (int idx = 1; idx < n; ++idx) {
      auto [xi, yi] = smash_pair_of_index(x, y, idx);
      s.action[g * n + idx] = smash_pair_index(x, y, x.act(g, xi), y.act(g, yi));
    }
  }
  return s;
}

namespace {
int nonbase_rank(const PointedGSet& s, int i) {
  return i < s.basepoint ? i : i - 1;
}
int nonbase_unrank(const PointedGSet& s, int r) {
  return r < s.basepoint ? r : r + 1;
}
}  // namespace

int smash_pair_index(const PointedGSet& x, const PointedGSet& y, int xi,
                     int yi) {
  if (xi == x.basepoint || yi == y.basepoint) return 0;
  return 1 + nonbase_rank(x, xi) * (y.size() - 1) + nonbase_rank(y, yi);
}

std::pair<int, int> smash_pair_of_index(const PointedGSet& x,
                                        const PointedGSet& y, int idx) {
  if (idx == 0) return {x.basepoint, y.basepoint};
  int r = idx - 1;
  int xr = r / (y.size() - 1);
  int yr = r % (y.size() - 1);
  return {nonbase_unrank(x, xr), nonbase_unrank(y, yr)};
}

PointedMap smash_of_maps(const PointedGSet& x, const PointedGSet& y,
                         const PointedGSet& x2, const PointedGSet& y2,
                         const PointedMap& f, const PointedMap& g) {
  const int n = 1 + (x.size() - 1) * (y.size() - 1);
  PointedMap out;
  out.map.resize(n);
  out.map[0] = 0;
  for (int idx = 1; idx < n; ++idx) {
    auto [xi, yi] = smash_pair_of_index(x, y, idx);
    out.map[idx] = smash_pair_index(x2, y2, f(xi), g(yi));
  }
  return out;
}

PointedGSet restrict_gset(const GroupHom& alpha, const PointedGSet& x) {
  if (x.group.get() != alpha.target.get())
    throw Error(ErrorCode::ExtentMismatch,
                "restrict_gset: gset extent is not the hom target");
  PointedGSet s;
  s.group = alpha.source;
  s.elements = x.elements;
  s.basepoint = x.basepoint;
  s.name = alpha.name + "*" + x.name;
  const int n = x.size();
  s.action.resize(alpha.source->order * n);
  for (int a = 0; a < alpha.source->order; ++a)
    for (int e = 0; e < n; ++e) s.action[a * n + e] = x.act(alpha(a), e);
  return s;
}

int MapSpace::rank_of(const PointedMap& f) const {
  // mixed-radix over non-basepoint source positions, earlier positions
  // most significant
  int rank = 0;
  for (int i = 0; i < source.size(); ++i) {
    if (i == source.basepoint) continue;
    rank = rank * target.size() + f(i);
  }
  return rank;
}

int MapSpace::action(int g, int h, int f_idx) const {
  const PointedMap& f = elements[f_idx];
  PointedMap out;
  out.map.resize(source.size());
  const int ginv = source.group->inv(g);
  for (int x = 0; x < source.size(); ++x)
    out.map[x] = target.act(h, f(source.act(ginv, x)));
  return rank_of(out);
}

MapSpace map_space(const PointedGSet& x, const PointedGSet& y) {
  MapSpace ms;
  ms.source = x;
  ms.target = y;
  long long count = 1;
  for (int i = 0; i < x.size() - 1; ++i) count *= y.size();
  ms.elements.reserve(static_cast<size_t>(count));
  PointedMap f;
  f.map.assign(x.size(), 0);
  f.map[x.basepoint] = y.basepoint;
  while (true) {
    ms.elements.push_back(f);
    int i = x.size() - 1;
    while (i >= 0) {
      if (i == x.basepoint) {
        --i;
        continue;
      }
      if (f.map[i] == y.size() - 1) {
        f.map[i] = 0;
        --i;
      } else {
        ++f.map[i];
        break;
      }
    }
    if (i < 0) break;
  }
  return ms;
}

std::vector<PointedMap> equivariant_maps(const PointedGSet& x,
                                         const PointedGSet& y) {
  if (x.group.get() != y.group.get())
    throw Error(ErrorCode::ExtentMismatch, "equivariant_maps: extents differ");
  MapSpace ms = map_space(x, y);
  std::vector<PointedMap> out;
  for (const PointedMap& f : ms.elements)
    if (is_equivariant(f, x, y)) out.push_back(f);
  return out;
}

}  // namespace equicat
