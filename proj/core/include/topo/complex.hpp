#pragma once

#include "topo/face.hpp"

#include <unordered_map>
#include <vector>

namespace topo {

// Immutable simplicial complex: full face set plus inclusion-maximal facets.
// The empty face is never stored; a default-constructed complex is void.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(const std::vector<Face>& facets);
  // Downward closure of an arbitrary face collection. An empty collection yields
  // the void complex rather than an error.
  static SimplicialComplex closure_of(const std::vector<Face>& faces);

  bool empty() const { return faces_.empty(); }
  int dim() const { return dim_; }
  size_t num_faces() const { return faces_.size(); }
  const FaceSet& faces() const { return faces_; }
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<int>& vertices() const { return vertices_; }
  bool contains(const Face& f) const { return faces_.count(f) > 0; }
  bool has_vertex(int v) const { return faces_.count(Face{v}) > 0; }

  std::vector<Face> sorted_faces() const;  // by dimension, then lexicographic
  std::vector<Face> faces_of_dim(int k) const;
  std::vector<long> f_vector() const;
  long euler() const;
  bool is_pure() const;
  bool is_point() const { return faces_.size() == 1; }

  // Indices into facets() of the facets containing vertex v.
  const std::vector<int>& facets_at(int v) const;
  std::vector<int> facets_containing(const Face& s) const;

  bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

 private:
  void finalize();

  FaceSet faces_;
  std::vector<Face> facets_;
  std::vector<int> vertices_;
  std::unordered_map<int, std::vector<int>> vertex_facets_;
  int dim_ = -1;
};

SimplicialComplex star(const Face& s, const SimplicialComplex& C);
// Lk(∅, C) = C.
SimplicialComplex link(const Face& s, const SimplicialComplex& C);
SimplicialComplex deletion(const SimplicialComplex& C, int v);
// Faces of C not containing s (removes s and everything above it).
SimplicialComplex deletion(const SimplicialComplex& C, const Face& s);
// Faces of C meeting no vertex of D.
SimplicialComplex deletion(const SimplicialComplex& C, const SimplicialComplex& D);
SimplicialComplex join(const Face& a, const Face& b);
SimplicialComplex join(const SimplicialComplex& A, const SimplicialComplex& B);
SimplicialComplex cone(int apex, const SimplicialComplex& C);
SimplicialComplex boundary(const SimplicialComplex& C);
SimplicialComplex induced(const SimplicialComplex& C, const std::vector<int>& verts);
SimplicialComplex complex_union(const SimplicialComplex& A, const SimplicialComplex& B);
SimplicialComplex complex_intersection(const SimplicialComplex& A, const SimplicialComplex& B);
bool is_subcomplex(const SimplicialComplex& A, const SimplicialComplex& B);

// Faces of C strictly containing s (the set L(s, C)).
std::vector<Face> strict_cofaces(const Face& s, const SimplicialComplex& C);

}  // namespace topo
