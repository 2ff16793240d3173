#pragma once

#include "topo/cell_complex.hpp"
#include "topo/certificate.hpp"
#include "topo/geometry.hpp"
#include "topo/polytope.hpp"
#include "topo/subdivision.hpp"

#include <cstdint>
#include <functional>

namespace topo {

// Maps a face of a subdivision D to the smallest cell of C containing it.
using CarrierMap = std::function<Face(const Face&)>;

// Carrier of a face of D inside a geometric simplicial complex C, found from the
// barycentric support of its barycenter. Throws CarrierMissing when D leaves |C|.
CarrierMap simplicial_carrier(const GeometricComplex& C, const GeometricComplex& D);
CarrierMap polytope_carrier(const Polytope& P, const GeometricComplex& D);

struct HudsonResult {
  DerivedComplex sd;            // sd D
  CollapseCertificate cert;     // sd D ↘ target
  SimplicialComplex target;     // faces of sd D carried by the end complex of C's certificate
};

// Transfers a collapse C ↘ C' to sd D ↘ R(sd D, |C'|).
HudsonResult hudson_collapse(const CellComplex& C, const CollapseCertificate& cert, const GeometricComplex& D,
                             const CarrierMap& carrier, uint64_t seed = 0);
HudsonResult hudson_collapse(const GeometricComplex& C, const CollapseCertificate& cert, const GeometricComplex& D,
                             uint64_t seed = 0);

// sd G ↘ point for a convex geometric complex.
HudsonResult collapse_convex(const GeometricComplex& G, uint64_t seed = 0);

}  // namespace topo
