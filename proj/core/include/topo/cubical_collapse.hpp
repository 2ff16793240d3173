#pragma once

#include "topo/certificate.hpp"
#include "topo/cubical.hpp"

namespace topo {

// A single simplex (P with all its faces) collapses onto St(mu, ∂P).
CollapseCertificate facet_star_collapse(const CellComplex& P, const Face& mu);
// Same for the cube P inside K, in K's vertex ids.
CollapseCertificate facet_star_collapse(const CubicalComplex& K, const Box& P, const Box& mu);

// Collapses K to the vertex w by repeatedly removing the facets whose distance
// minimum from w is largest.
CollapseCertificate collapse_cubical_cat0(const CubicalComplex& K, int w);

}  // namespace topo
