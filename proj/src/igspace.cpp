#include "equicat/igspace.hpp"

#include "equicat/error.hpp"

namespace equicat {

void IGSpace::init_pair_layout() {
  const int n = nreps();
  pair_pos.assign(static_cast<size_t>(n) * n, -1);
  const auto& pairs = cat->same_dim_pairs(gi);
  morph.assign(pairs.size(), {});
  for (size_t p = 0; p < pairs.size(); ++p)
    pair_pos[pairs[p].first * n + pairs[p].second] = static_cast<int>(p);
}

GlobalMap compose_global_maps(const GlobalMap& g, const GlobalMap& f) {
  if (g.comp.size() != f.comp.size())
    throw Error(ErrorCode::CoverageGap, "compose_global_maps: components differ");
  GlobalMap out;
  out.name = g.name + "." + f.name;
  out.comp.resize(f.comp.size());
  for (size_t gi = 0; gi < f.comp.size(); ++gi) {
    out.comp[gi].resize(f.comp[gi].size());
    for (size_t ri = 0; ri < f.comp[gi].size(); ++ri) {
      const auto& first = f.comp[gi][ri];
      const auto& second = g.comp[gi][ri];
      auto& tbl = out.comp[gi][ri];
      tbl.resize(first.size());
      for (size_t x = 0; x < first.size(); ++x) tbl[x] = second[first[x]];
    }
  }
  return out;
}

GlobalMap identity_global_map(const GlobalSpace& a) {
  GlobalMap out;
  out.name = "id_" + a.name;
  out.comp.resize(a.components.size());
  for (size_t gi = 0; gi < a.components.size(); ++gi) {
    out.comp[gi].resize(a.components[gi].objects.size());
    for (size_t ri = 0; ri < a.components[gi].objects.size(); ++ri) {
      const int n = a.components[gi].objects[ri].size();
      auto& tbl = out.comp[gi][ri];
      tbl.resize(n);
      for (int x = 0; x < n; ++x) tbl[x] = static_cast<int16_t>(x);
    }
  }
  return out;
}

}  // namespace equicat
