#pragma once

#include "topo/cell_complex.hpp"
#include "topo/certificate.hpp"

#include <vector>

namespace topo::detail {

// Mutable incidence structure for running collapses on a cell complex.
// Relies on the diamond property: a cell with exactly one present cofacet has
// exactly one present strict superset.
class CollapseState {
 public:
  explicit CollapseState(const CellComplex& C);
  explicit CollapseState(const SimplicialComplex& C);

  int size() const { return static_cast<int>(cells_.size()); }
  int id(const Face& c) const;
  int find(const Face& c) const;  // -1 if absent from the source
  const Face& cell(int i) const { return cells_[i]; }
  int dim(int i) const { return dim_[i]; }
  bool present(int i) const { return present_[i]; }
  int present_count() const { return alive_; }
  const std::vector<int>& cofacets(int i) const { return up_[i]; }
  const std::vector<int>& facets(int i) const { return down_[i]; }
  int up_count(int i) const { return up_count_[i]; }

  // Present coface when i is free, else -1.
  int free_partner(int i) const;
  void remove_pair(int s, int S);
  void restore_pair(int s, int S);
  const std::vector<bool>& mask() const { return present_; }

 private:
  void build(const std::vector<Face>& cells, const std::vector<int>& dims,
             const std::vector<std::vector<int>>& down);
  std::vector<Face> cells_;
  std::vector<int> dim_;
  std::vector<std::vector<int>> down_, up_;
  std::vector<int> up_count_;
  std::vector<bool> present_;
  FaceMap<int> index_;
  int alive_ = 0;
};

}  // namespace topo::detail
