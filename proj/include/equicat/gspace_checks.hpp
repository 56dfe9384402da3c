#pragma once

#include "equicat/catalog.hpp"
#include "equicat/report.hpp"

namespace equicat {

/// Map-space fibration identity F(Z, alpha*X) = (alpha x 1)* F(Z, X) as a
/// table equality for every catalog hom and pointed G-set, plus naturality
/// squares in Z over a generated probe set of based maps.
Report check_top_fibration(const SiteCatalog& cat);

/// Structural laws of the pointed-G-set fibration: smash unit and
/// associativity isomorphisms, the identity element of each self-map space
/// being diagonal-fixed, and equivariance of map-space composition.
Report check_gspace_laws(const SiteCatalog& cat);

}  // namespace equicat
