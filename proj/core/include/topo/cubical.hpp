#pragma once

#include "topo/cell_complex.hpp"

#include <map>
#include <utility>
#include <vector>

namespace topo {

// Axis-aligned integer box; every interval has length 0 or 1.
using Box = std::vector<std::pair<int, int>>;
using IntPoint = std::vector<int>;

int box_dim(const Box& b);
std::vector<Box> box_faces(const Box& b);  // all faces including b itself
std::vector<IntPoint> box_corners(const Box& b);

// Cubical complex generated by a list of boxes. Corners get vertex ids in
// lexicographic order of their coordinates.
class CubicalComplex {
 public:
  static CubicalComplex from_boxes(const std::vector<Box>& boxes);

  const std::vector<Box>& maximal_boxes() const { return boxes_; }
  const CellComplex& cells() const { return cells_; }
  int vertex_id(const IntPoint& p) const;
  const IntPoint& point(int id) const { return points_.at(id); }
  size_t num_vertices() const { return points_.size(); }
  int ambient_dim() const { return ambient_; }
  // Box of a cell given by its corner-id set.
  const Box& box_of(const Face& cell) const;
  Face cell_of(const Box& b) const;
  std::vector<long> f_vector() const { return cells_.f_vector(); }

 private:
  std::vector<Box> boxes_;
  std::vector<IntPoint> points_;
  std::map<IntPoint, int> ids_;
  FaceMap<Box> box_of_;
  CellComplex cells_;
  int ambient_ = 0;
};

}  // namespace topo
