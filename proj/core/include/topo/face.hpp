#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace topo {

// A simplex (or a cell, identified by its vertex set) as a strictly increasing id list.
using Face = std::vector<int>;

struct FaceHash {
  size_t operator()(const Face& f) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (int v : f) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(v)) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h ^ (h >> 29));
  }
};

using FaceSet = std::unordered_set<Face, FaceHash>;
template <class T>
using FaceMap = std::unordered_map<Face, T, FaceHash>;

Face make_face(std::vector<int> v);
inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

bool is_subface(const Face& a, const Face& b);  // a ⊆ b
bool contains_vertex(const Face& f, int v);
Face face_union(const Face& a, const Face& b);
Face face_minus(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);
Face face_without(const Face& f, int v);
Face face_with(const Face& f, int v);
bool disjoint(const Face& a, const Face& b);

// Orders faces by dimension, then lexicographically.
bool dim_lex_less(const Face& a, const Face& b);

// All nonempty subsets of f (including f).
std::vector<Face> nonempty_subfaces(const Face& f);
// Codimension-one faces of f (empty for vertices).
std::vector<Face> boundary_faces(const Face& f);

std::string to_string(const Face& f);

}  // namespace topo
