#include "topo/cubical.hpp"

#include "topo/errors.hpp"

#include <algorithm>
#include <set>

namespace topo {

int box_dim(const Box& b) {
  int d = 0;
  for (auto& [lo, hi] : b) d += hi - lo;
  return d;
}

std::vector<Box> box_faces(const Box& b) {
  std::vector<Box> out{Box{}};
  for (auto& [lo, hi] : b) {
    std::vector<Box> next;
    for (const Box& p : out) {
      std::vector<std::pair<int, int>> options{{lo, hi}};
      if (hi != lo) {
        options.push_back({lo, lo});
        options.push_back({hi, hi});
      }
      for (auto& o : options) {
        Box q = p;
        q.push_back(o);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<IntPoint> box_corners(const Box& b) {
  std::vector<IntPoint> out{IntPoint{}};
  for (auto& [lo, hi] : b) {
    std::vector<IntPoint> next;
    for (const IntPoint& p : out) {
      for (int x = lo; x <= hi; ++x) {
        IntPoint q = p;
        q.push_back(x);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

CubicalComplex CubicalComplex::from_boxes(const std::vector<Box>& boxes) {
  if (boxes.empty()) throw TopoError(ErrorKind::EmptyInput, "box list is empty");
  CubicalComplex K;
  K.ambient_ = static_cast<int>(boxes.front().size());
  std::set<Box> all;
  for (const Box& b : boxes) {
    if (static_cast<int>(b.size()) != K.ambient_) throw TopoError(ErrorKind::InputError, "boxes of mixed ambient dimension");
    for (auto& [lo, hi] : b)
      if (hi - lo != 0 && hi - lo != 1) throw TopoError(ErrorKind::InputError, "box interval must have length 0 or 1");
    for (Box& f : box_faces(b)) all.insert(std::move(f));
  }
  std::set<IntPoint> pts;
  for (const Box& b : all)
    if (box_dim(b) == 0) pts.insert(box_corners(b).front());
  for (const IntPoint& p : pts) {
    K.ids_[p] = static_cast<int>(K.points_.size());
    K.points_.push_back(p);
  }
  std::vector<Box> sorted(all.begin(), all.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const Box& a, const Box& b) { return box_dim(a) < box_dim(b); });
  for (const Box& b : sorted) {
    Face c = K.cell_of(b);
    K.box_of_[c] = b;
    K.cells_.add_cell(c, box_dim(b));
  }
  for (const Face& c : K.cells_.maximal_cells()) K.boxes_.push_back(K.box_of_.at(c));
  std::sort(K.boxes_.begin(), K.boxes_.end());
  return K;
}

int CubicalComplex::vertex_id(const IntPoint& p) const {
  auto it = ids_.find(p);
  if (it == ids_.end()) throw TopoError(ErrorKind::FaceNotInComplex, "no vertex at given point");
  return it->second;
}

const Box& CubicalComplex::box_of(const Face& cell) const {
  auto it = box_of_.find(cell);
  if (it == box_of_.end()) throw TopoError(ErrorKind::FaceNotInComplex, "cell " + to_string(cell));
  return it->second;
}

Face CubicalComplex::cell_of(const Box& b) const {
  std::vector<int> ids;
  for (const IntPoint& p : box_corners(b)) ids.push_back(vertex_id(p));
  return make_face(ids);
}

}  // namespace topo
