#pragma once

#include "topo/complex.hpp"
#include "topo/geometry.hpp"

#include <map>
#include <vector>

namespace topo {

// Derived subdivision whose vertices are tagged with the parent face they stand for.
struct DerivedComplex {
  SimplicialComplex complex;
  std::vector<Face> carrier;       // sd vertex id -> parent face
  FaceMap<int> vertex_of;          // parent face -> sd vertex id
  std::vector<Face> root_carrier;  // composed carrier in the original complex
  std::map<int, Vec> pos;          // empty unless the parent was geometric

  int id(const Face& parent_face) const;
  // Parent faces of an sd face, ordered by inclusion.
  std::vector<Face> chain(const Face& sd_face) const;
  Face from_chain(const std::vector<Face>& chain) const;
  // Largest parent face of the chain.
  const Face& carrier_of(const Face& sd_face) const;
  GeometricComplex geometric() const;
};

DerivedComplex sd(const SimplicialComplex& C);
DerivedComplex sd(const GeometricComplex& G);
// m-th iterated subdivision; root_carrier maps into C. m = 0 returns C itself.
DerivedComplex sd_m(const SimplicialComplex& C, int m);
DerivedComplex sd_m(const GeometricComplex& G, int m);

// Linear extension of the partial order generated from a strict total order on a
// subset of faces (seed, listed from smallest to largest).
struct DerivedOrder {
  std::vector<Face> order;  // smallest first
  FaceMap<int> rank;
  bool less(const Face& a, const Face& b) const { return rank.at(a) < rank.at(b); }
};

DerivedOrder derived_order(const SimplicialComplex& C, const std::vector<Face>& seed);

// N(D, C) as a subcomplex of the given subdivision of C.
SimplicialComplex derived_neighborhood(const SimplicialComplex& D, const DerivedComplex& sdC);
// Convenience form building sd C first.
SimplicialComplex derived_neighborhood(const SimplicialComplex& D, const SimplicialComplex& C);

// Derived subdivision placing the vertex of every face that crosses the
// hyperplane {<y, normal> = offset} on that hyperplane.
DerivedComplex h_splitting_sd(const GeometricComplex& G, const Halfspace& H);

}  // namespace topo
