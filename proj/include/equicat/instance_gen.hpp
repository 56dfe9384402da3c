#pragma once

#include <cstdint>

#include "equicat/igspace.hpp"
#include "equicat/kan.hpp"

namespace equicat {

/// Deterministic generator (splitmix64); identical streams on every
/// platform, so seeded reports are byte-identical everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n) by rejection.
  int below(int n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % static_cast<uint64_t>(n);
    uint64_t v = next();
    while (v >= limit) v = next();
    return static_cast<int>(v % static_cast<uint64_t>(n));
  }

 private:
  uint64_t state_;
};

/// Random lawful I-space instance: per dimension, a pointed union of coset
/// orbits of the signed permutation group, so the functor laws hold by
/// construction and are still validated afterwards. Sizes stay <= 6.
ISpace random_ispace(uint64_t seed, int index, int dim_cap);

/// All equivariant based maps X -> Y (componentwise per dimension); used
/// to sample natural transformations between I-spaces.
std::vector<std::vector<int16_t>> random_ispace_map(const ISpace& x,
                                                    const ISpace& y, Rng& rng);

/// Functorial image of an I-space map under extension: per group and rep,
/// the induced map on Kan classes [s, e] -> [s, f(e)].
GlobalMap extend_map(const std::vector<std::vector<int16_t>>& f,
                     const GlobalExtension& ex, const GlobalExtension& ey,
                     const std::string& name);

}  // namespace equicat
