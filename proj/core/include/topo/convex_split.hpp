#pragma once

#include "topo/certificate.hpp"
#include "topo/geometry.hpp"
#include "topo/search.hpp"
#include "topo/subdivision.hpp"

#include <cstdint>
#include <functional>

namespace topo {

// Collapses Sigma0 onto Z by deleting the vertices of `order` one at a time.
// Each deletion collapses the link of the vertex (in the part of Sigma0 not yet
// deleted) onto its link in Z, or to a point when the vertex is not in Z; a
// known cone apex lets the link collapse be written down directly.
CollapseCertificate eliminate_vertices(const SimplicialComplex& Sigma0, const SimplicialComplex& Z,
                                       const std::vector<int>& order, const std::function<int(int)>& cone_apex,
                                       SearchBudget budget = {});

enum class SplitMode { A, B, C };

struct SplitCollapse {
  DerivedComplex sd;           // subdivision the certificate lives in
  SimplicialComplex source;    // complex the certificate starts from
  SimplicialComplex target;    // complex it ends at
  CollapseCertificate cert;
  Face removed_facet;          // mode C: the facet F of sd ∂C left out of the target
};

// sd C ↘ sd ∂C - F for a convex full-dimensional geometric complex C.
SplitCollapse convex_collapse_to_boundary(const GeometricComplex& G, uint64_t seed = 0);

// The hemisphere is {y : <y, h> >= 0}.
SplitCollapse convex_split_collapse(const SphericalComplex& S, const Vec& h, SplitMode mode, uint64_t seed = 0,
                                    int max_attempts = 20);

// sd C - delta ↘ sd ∂C for a convex full-dimensional C and a facet delta of sd C
// (ids of sd(G.complex)).
CollapseCertificate endo_collapse_sd(const GeometricComplex& G, const Face& delta, uint64_t seed = 0);

// C - sigma ↘ ∂C, or to a point when C has no boundary, by search.
CollapseSearchResult endo_collapse(const SimplicialComplex& C, const Face& sigma, SearchBudget budget = {});

}  // namespace topo
