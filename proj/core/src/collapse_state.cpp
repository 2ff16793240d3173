#include "collapse_state.hpp"

#include "topo/errors.hpp"

#include <algorithm>

namespace topo::detail {

CollapseState::CollapseState(const CellComplex& C) {
  std::vector<Face> cells = C.sorted_cells();
  std::vector<int> dims;
  for (const Face& c : cells) dims.push_back(C.dim_of(c));
  FaceMap<int> idx;
  for (size_t i = 0; i < cells.size(); ++i) idx[cells[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> down(cells.size());
  bool simplicial = C.is_simplicial();
  for (size_t i = 0; i < cells.size(); ++i) {
    std::vector<Face> fs = simplicial ? boundary_faces(cells[i]) : C.facets_of(cells[i]);
    for (const Face& f : fs) down[i].push_back(idx.at(f));
  }
  build(cells, dims, down);
}

CollapseState::CollapseState(const SimplicialComplex& C) {
  std::vector<Face> cells = C.sorted_faces();
  std::vector<int> dims;
  FaceMap<int> idx;
  for (size_t i = 0; i < cells.size(); ++i) {
    idx[cells[i]] = static_cast<int>(i);
    dims.push_back(face_dim(cells[i]));
  }
  std::vector<std::vector<int>> down(cells.size());
  for (size_t i = 0; i < cells.size(); ++i)
    for (const Face& f : boundary_faces(cells[i])) down[i].push_back(idx.at(f));
  build(cells, dims, down);
}

void CollapseState::build(const std::vector<Face>& cells, const std::vector<int>& dims,
                          const std::vector<std::vector<int>>& down) {
  cells_ = cells;
  dim_ = dims;
  down_ = down;
  up_.assign(cells.size(), {});
  for (size_t i = 0; i < cells.size(); ++i) {
    index_[cells[i]] = static_cast<int>(i);
    for (int f : down[i]) up_[f].push_back(static_cast<int>(i));
  }
  up_count_.resize(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) up_count_[i] = static_cast<int>(up_[i].size());
  present_.assign(cells.size(), true);
  alive_ = static_cast<int>(cells.size());
}

int CollapseState::find(const Face& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

int CollapseState::id(const Face& c) const {
  int i = find(c);
  if (i < 0) throw TopoError(ErrorKind::FaceNotInComplex, to_string(c));
  return i;
}

int CollapseState::free_partner(int i) const {
  if (!present_[i] || up_count_[i] != 1) return -1;
  for (int S : up_[i])
    if (present_[S]) return up_count_[S] == 0 ? S : -1;
  return -1;
}

void CollapseState::remove_pair(int s, int S) {
  for (int c : {S, s}) {
    present_[c] = false;
    --alive_;
    for (int f : down_[c]) --up_count_[f];
  }
}

void CollapseState::restore_pair(int s, int S) {
  for (int c : {s, S}) {
    present_[c] = true;
    ++alive_;
    for (int f : down_[c]) ++up_count_[f];
  }
}

}  // namespace topo::detail
