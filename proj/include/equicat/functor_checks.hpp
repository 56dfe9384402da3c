#pragma once

#include "equicat/igspace.hpp"
#include "equicat/report.hpp"

namespace equicat {

/// Functor laws and G-continuity, exhaustively over the group's slice of
/// the catalog. Composition triples with identical table content are
/// verified once; the tests compare this against a naive full triple
/// sweep to confirm the deduplication changes nothing.
Report check_igspace(const IGSpace& a);

/// Coherence of a global family: each phi component is an equivariant
/// based bijection, natural in the rep, satisfying the cocycle and unit
/// conditions, and values at trivial reps carry the trivial action.
Report check_global(const GlobalSpace& a);

/// Componentwise equivariance, naturality in each fiber, and the
/// compatibility square against both families' phi.
Report check_global_map(const GlobalMap& f, const GlobalSpace& a,
                        const GlobalSpace& b);

}  // namespace equicat
