#include "topo/complex.hpp"

#include "topo/errors.hpp"

#include <algorithm>
#include <map>

namespace topo {

namespace {

const std::vector<int> kNoFacets;

}  // namespace

SimplicialComplex SimplicialComplex::closure_of(const std::vector<Face>& input) {
  std::vector<Face> faces;
  faces.reserve(input.size());
  for (const Face& f : input) {
    Face g = make_face(f);
    if (g.empty()) continue;
    if (g.front() < 0) throw TopoError(ErrorKind::InputError, "negative vertex id in " + to_string(g));
    faces.push_back(std::move(g));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  SimplicialComplex C;
  for (const Face& f : faces) {
    if (C.faces_.count(f)) continue;
    C.facets_.push_back(f);
    for (Face& s : nonempty_subfaces(f)) C.faces_.insert(std::move(s));
  }
  C.finalize();
  return C;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& facets) {
  bool any = false;
  for (const Face& f : facets)
    if (!f.empty()) any = true;
  if (!any) throw TopoError(ErrorKind::EmptyInput, "facet list is empty");
  return closure_of(facets);
}

void SimplicialComplex::finalize() {
  std::sort(facets_.begin(), facets_.end());
  dim_ = -1;
  vertex_facets_.clear();
  for (size_t i = 0; i < facets_.size(); ++i) {
    dim_ = std::max(dim_, face_dim(facets_[i]));
    for (int v : facets_[i]) vertex_facets_[v].push_back(static_cast<int>(i));
  }
  vertices_.clear();
  for (auto& [v, _] : vertex_facets_) vertices_.push_back(v);
  std::sort(vertices_.begin(), vertices_.end());
}

const std::vector<int>& SimplicialComplex::facets_at(int v) const {
  auto it = vertex_facets_.find(v);
  return it == vertex_facets_.end() ? kNoFacets : it->second;
}

std::vector<int> SimplicialComplex::facets_containing(const Face& s) const {
  std::vector<int> out;
  if (s.empty()) {
    out.resize(facets_.size());
    for (size_t i = 0; i < facets_.size(); ++i) out[i] = static_cast<int>(i);
    return out;
  }
  // scan the shortest incidence list
  const std::vector<int>* best = &facets_at(s[0]);
  for (int v : s)
    if (facets_at(v).size() < best->size()) best = &facets_at(v);
  for (int i : *best)
    if (is_subface(s, facets_[i])) out.push_back(i);
  return out;
}

std::vector<Face> SimplicialComplex::sorted_faces() const {
  std::vector<Face> out(faces_.begin(), faces_.end());
  std::sort(out.begin(), out.end(), dim_lex_less);
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int k) const {
  std::vector<Face> out;
  for (const Face& f : faces_)
    if (face_dim(f) == k) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> fv(dim_ + 1, 0);
  for (const Face& f : faces_) ++fv[face_dim(f)];
  return fv;
}

long SimplicialComplex::euler() const {
  long chi = 0;
  for (const Face& f : faces_) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

bool SimplicialComplex::is_pure() const {
  for (const Face& f : facets_)
    if (face_dim(f) != dim_) return false;
  return true;
}

SimplicialComplex star(const Face& s, const SimplicialComplex& C) {
  if (s.empty()) return C;
  if (!C.contains(s)) throw TopoError(ErrorKind::FaceNotInComplex, "star of " + to_string(s));
  std::vector<Face> fs;
  for (int i : C.facets_containing(s)) fs.push_back(C.facets()[i]);
  return SimplicialComplex::closure_of(fs);
}

SimplicialComplex link(const Face& s, const SimplicialComplex& C) {
  if (s.empty()) return C;
  if (!C.contains(s)) throw TopoError(ErrorKind::FaceNotInComplex, "link of " + to_string(s));
  std::vector<Face> fs;
  for (int i : C.facets_containing(s)) fs.push_back(face_minus(C.facets()[i], s));
  return SimplicialComplex::closure_of(fs);
}

SimplicialComplex deletion(const SimplicialComplex& C, int v) {
  if (!C.has_vertex(v)) throw TopoError(ErrorKind::FaceNotInComplex, "deletion of vertex " + std::to_string(v));
  std::vector<Face> fs;
  for (const Face& f : C.facets()) fs.push_back(contains_vertex(f, v) ? face_without(f, v) : f);
  return SimplicialComplex::closure_of(fs);
}

SimplicialComplex deletion(const SimplicialComplex& C, const Face& s) {
  if (!C.contains(s)) throw TopoError(ErrorKind::FaceNotInComplex, "deletion of " + to_string(s));
  if (s.size() == 1) return deletion(C, s[0]);
  std::vector<Face> fs;
  for (const Face& f : C.facets()) {
    if (!is_subface(s, f)) {
      fs.push_back(f);
      continue;
    }
    // keep the maximal faces of f that miss at least one vertex of s
    for (int v : s) fs.push_back(face_without(f, v));
  }
  return SimplicialComplex::closure_of(fs);
}

SimplicialComplex deletion(const SimplicialComplex& C, const SimplicialComplex& D) {
  if (!is_subcomplex(D, C)) throw TopoError(ErrorKind::FaceNotInComplex, "deleted complex is not a subcomplex");
  std::vector<int> keep;
  for (int v : C.vertices())
    if (!D.has_vertex(v)) keep.push_back(v);
  return induced(C, keep);
}

SimplicialComplex join(const Face& a, const Face& b) {
  if (!disjoint(a, b)) throw TopoError(ErrorKind::VertexClash, "join of " + to_string(a) + " and " + to_string(b));
  return SimplicialComplex::from_facets({face_union(a, b)});
}

SimplicialComplex join(const SimplicialComplex& A, const SimplicialComplex& B) {
  if (A.empty()) return B;
  if (B.empty()) return A;
  for (int v : A.vertices())
    if (B.has_vertex(v)) throw TopoError(ErrorKind::VertexClash, "join shares vertex " + std::to_string(v));
  std::vector<Face> fs;
  for (const Face& a : A.facets())
    for (const Face& b : B.facets()) fs.push_back(face_union(a, b));
  return SimplicialComplex::closure_of(fs);
}

SimplicialComplex cone(int apex, const SimplicialComplex& C) {
  if (C.has_vertex(apex)) throw TopoError(ErrorKind::VertexClash, "cone apex " + std::to_string(apex) + " already present");
  if (C.empty()) return SimplicialComplex::from_facets({{apex}});
  std::vector<Face> fs;
  for (const Face& f : C.facets()) fs.push_back(face_with(f, apex));
  return SimplicialComplex::closure_of(fs);
}

SimplicialComplex boundary(const SimplicialComplex& C) {
  if (C.empty()) return C;
  if (!C.is_pure()) throw TopoError(ErrorKind::NotPseudomanifold, "complex is not pure");
  FaceMap<int> count;
  for (const Face& f : C.facets())
    for (Face& r : boundary_faces(f)) ++count[r];
  std::vector<Face> ridges;
  for (auto& [r, c] : count) {
    if (c > 2) throw TopoError(ErrorKind::NotPseudomanifold, "ridge " + to_string(r) + " lies in " + std::to_string(c) + " facets");
    if (c == 1) ridges.push_back(r);
  }
  return SimplicialComplex::closure_of(ridges);
}

SimplicialComplex induced(const SimplicialComplex& C, const std::vector<int>& verts) {
  Face keep = make_face(verts);
  std::vector<Face> fs;
  for (const Face& f : C.facets()) {
    Face g = face_intersection(f, keep);
    if (!g.empty()) fs.push_back(std::move(g));
  }
  return SimplicialComplex::closure_of(fs);
}

SimplicialComplex complex_union(const SimplicialComplex& A, const SimplicialComplex& B) {
  std::vector<Face> fs = A.facets();
  fs.insert(fs.end(), B.facets().begin(), B.facets().end());
  return SimplicialComplex::closure_of(fs);
}

SimplicialComplex complex_intersection(const SimplicialComplex& A, const SimplicialComplex& B) {
  std::vector<Face> fs;
  const SimplicialComplex& small = A.num_faces() <= B.num_faces() ? A : B;
  const SimplicialComplex& big = A.num_faces() <= B.num_faces() ? B : A;
  for (const Face& f : small.faces())
    if (big.contains(f)) fs.push_back(f);
  return SimplicialComplex::closure_of(fs);
}

bool is_subcomplex(const SimplicialComplex& A, const SimplicialComplex& B) {
  for (const Face& f : A.facets())
    if (!B.contains(f)) return false;
  return true;
}

std::vector<Face> strict_cofaces(const Face& s, const SimplicialComplex& C) {
  FaceSet seen;
  for (int i : C.facets_containing(s)) {
    const Face& F = C.facets()[i];
    Face rest = face_minus(F, s);
    for (Face& r : nonempty_subfaces(rest)) seen.insert(face_union(s, r));
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), dim_lex_less);
  return out;
}

}  // namespace topo
