#include "topo/cell_complex.hpp"

#include "topo/errors.hpp"

#include <algorithm>

namespace topo {

CellComplex CellComplex::from_simplicial(const SimplicialComplex& C) {
  CellComplex X;
  for (const Face& f : C.sorted_faces()) X.add_cell(f, face_dim(f));
  return X;
}

void CellComplex::add_cell(const Face& verts, int dim) {
  if (verts.empty()) throw TopoError(ErrorKind::InputError, "empty cell");
  if (dims_.count(verts)) return;
  int id = static_cast<int>(cells_.size());
  cells_.push_back(verts);
  dims_[verts] = dim;
  for (int v : verts) at_vertex_[v].push_back(id);
  dim_ = std::max(dim_, dim);
}

int CellComplex::dim_of(const Face& c) const {
  auto it = dims_.find(c);
  if (it == dims_.end()) throw TopoError(ErrorKind::FaceNotInComplex, "cell " + to_string(c));
  return it->second;
}

std::vector<Face> CellComplex::sorted_cells() const {
  std::vector<Face> out = cells_;
  std::sort(out.begin(), out.end(), [this](const Face& a, const Face& b) {
    int da = dims_.at(a), db = dims_.at(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

std::vector<Face> CellComplex::maximal_cells() const {
  std::vector<Face> out;
  for (const Face& c : cells_)
    if (cofaces_of(c).empty()) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> CellComplex::f_vector() const {
  std::vector<long> fv(dim_ + 1, 0);
  for (auto& [c, d] : dims_) ++fv[d];
  return fv;
}

long CellComplex::euler() const {
  long chi = 0;
  for (auto& [c, d] : dims_) chi += (d % 2 == 0) ? 1 : -1;
  return chi;
}

std::vector<Face> CellComplex::facets_of(const Face& c) const {
  int d = dim_of(c);
  std::vector<Face> out;
  if (c.empty()) return out;
  FaceSet seen;
  for (int v : c) {
    for (int id : at_vertex_.at(v)) {
      const Face& g = cells_[id];
      if (g.size() < c.size() && dims_.at(g) == d - 1 && is_subface(g, c) && seen.insert(g).second)
        out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> CellComplex::cofaces_of(const Face& c) const {
  std::vector<Face> out;
  auto it = at_vertex_.find(c.front());
  if (it == at_vertex_.end()) return out;
  for (int id : it->second) {
    const Face& g = cells_[id];
    if (g.size() > c.size() && is_subface(c, g)) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> CellComplex::closure(const std::vector<Face>& tops) const {
  FaceSet out;
  for (const Face& t : tops) {
    if (t.empty()) continue;
    auto it = at_vertex_.find(t.front());
    if (it == at_vertex_.end()) continue;
    // every nonempty cell inside t contains some vertex of t
    for (int v : t)
      for (int id : at_vertex_.at(v))
        if (is_subface(cells_[id], t)) out.insert(cells_[id]);
  }
  std::vector<Face> r(out.begin(), out.end());
  std::sort(r.begin(), r.end(), dim_lex_less);
  return r;
}

bool CellComplex::is_simplicial() const {
  for (auto& [c, d] : dims_)
    if (face_dim(c) != d) return false;
  return true;
}

}  // namespace topo
