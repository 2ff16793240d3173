#pragma once

#include "topo/complex.hpp"
#include "topo/face.hpp"

#include <utility>
#include <vector>

namespace topo {

// Regular cell complex whose cells are identified by their vertex sets, with the
// face relation given by vertex-set inclusion. Holds simplicial, cubical and
// polytopal complexes uniformly so that collapses can be replayed on any of them.
class CellComplex {
 public:
  CellComplex() = default;
  static CellComplex from_simplicial(const SimplicialComplex& C);

  // Adds a cell; the caller is responsible for adding its faces too.
  void add_cell(const Face& verts, int dim);

  bool contains(const Face& c) const { return dims_.count(c) > 0; }
  int dim_of(const Face& c) const;
  int dim() const { return dim_; }
  size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<Face>& cells() const { return cells_; }
  std::vector<Face> sorted_cells() const;  // by dimension, then lexicographic
  std::vector<Face> maximal_cells() const;
  std::vector<long> f_vector() const;
  long euler() const;

  // Cells of dimension dim_of(c)-1 contained in c.
  std::vector<Face> facets_of(const Face& c) const;
  // Cells strictly containing c.
  std::vector<Face> cofaces_of(const Face& c) const;
  // All cells contained in some cell of `tops` (downward closure inside this complex).
  std::vector<Face> closure(const std::vector<Face>& tops) const;
  bool is_simplicial() const;

 private:
  std::vector<Face> cells_;
  FaceMap<int> dims_;
  std::unordered_map<int, std::vector<int>> at_vertex_;
  int dim_ = -1;
};

}  // namespace topo
