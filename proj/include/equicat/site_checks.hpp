#pragma once

#include "equicat/catalog.hpp"
#include "equicat/report.hpp"

namespace equicat {

/// Indexed-category axioms, exhaustively over catalog homs and reps:
///  - restriction along identity homs is the identity on rep data,
///  - (beta alpha)* equals alpha* o beta* as strict equality of rep data,
///  - alpha* is bijective on hom-space element lists with the conjugation
///    actions matching through alpha,
///  - restriction commutes strictly with direct sum.
Report check_site_axioms(const SiteCatalog& cat);

/// Fibration condition: for every alpha: G -> H, V over H, and probe Z in
/// the catalog, hom(Z, alpha*V) equals (1 x alpha)* hom(Z, V) element list
/// and action table for table.
Report check_restriction_object(const SiteCatalog& cat);

/// Grothendieck round trip: the diagonal hom-space action equals the
/// restriction of the two-sided conjugation action along the diagonal,
/// for every same-group catalog pair.
Report check_grothendieck(const SiteCatalog& cat);

}  // namespace equicat
