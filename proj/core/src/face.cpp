#include "topo/face.hpp"

#include "topo/errors.hpp"

#include <algorithm>

namespace topo {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorKind::VertexClash: return "VertexClash";
    case ErrorKind::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorKind::NotSubcomplex: return "NotSubcomplex";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NonUniqueMinimum: return "NonUniqueMinimum";
    case ErrorKind::StarMinimalityViolation: return "StarMinimalityViolation";
    case ErrorKind::PointOutsideComplex: return "PointOutsideComplex";
    case ErrorKind::DegenerateFacet: return "DegenerateFacet";
    case ErrorKind::RetryBudgetExceeded: return "RetryBudgetExceeded";
    case ErrorKind::NonGenericDirection: return "NonGenericDirection";
    case ErrorKind::NonGenericHyperplane: return "NonGenericHyperplane";
    case ErrorKind::AntipodalAmbiguity: return "AntipodalAmbiguity";
    case ErrorKind::CyclicRelation: return "CyclicRelation";
    case ErrorKind::OracleInconsistency: return "OracleInconsistency";
    case ErrorKind::JoinMissing: return "JoinMissing";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::UnsupportedCell: return "UnsupportedCell";
    case ErrorKind::RealizationSearchFailed: return "RealizationSearchFailed";
    case ErrorKind::GenericityFailure: return "GenericityFailure";
    case ErrorKind::RecursionBudgetExceeded: return "RecursionBudgetExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CarrierMissing: return "CarrierMissing";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::CertificateRejected: return "CertificateRejected";
    case ErrorKind::UnknownSpec: return "UnknownSpec";
    case ErrorKind::BadParameters: return "BadParameters";
  }
  return "Unknown";
}

Face make_face(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_subface(const Face& a, const Face& b) {
  if (a.size() > b.size()) return false;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains_vertex(const Face& f, int v) { return std::binary_search(f.begin(), f.end(), v); }

Face face_union(const Face& a, const Face& b) {
  Face r;
  r.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Face face_minus(const Face& a, const Face& b) {
  Face r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Face face_intersection(const Face& a, const Face& b) {
  Face r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Face face_without(const Face& f, int v) {
  Face r;
  r.reserve(f.size());
  for (int x : f)
    if (x != v) r.push_back(x);
  return r;
}

Face face_with(const Face& f, int v) {
  Face r = f;
  auto it = std::lower_bound(r.begin(), r.end(), v);
  if (it == r.end() || *it != v) r.insert(it, v);
  return r;
}

bool disjoint(const Face& a, const Face& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

bool dim_lex_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Face> nonempty_subfaces(const Face& f) {
  std::vector<Face> out;
  size_t n = f.size();
  if (n >= 31) throw TopoError(ErrorKind::InputError, "face too large to enumerate");
  out.reserve((size_t(1) << n) - 1);
  for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
    Face s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (uint32_t(1) << i)) s.push_back(f[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Face> boundary_faces(const Face& f) {
  std::vector<Face> out;
  if (f.size() <= 1) return out;
  for (size_t i = 0; i < f.size(); ++i) {
    Face s;
    s.reserve(f.size() - 1);
    for (size_t j = 0; j < f.size(); ++j)
      if (j != i) s.push_back(f[j]);
    out.push_back(std::move(s));
  }
  return out;
}

std::string to_string(const Face& f) {
  std::string s = "[";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "]";
}

}  // namespace topo
