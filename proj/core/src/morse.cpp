#include "topo/morse.hpp"

#include "topo/errors.hpp"

#include <algorithm>

namespace topo {

const OracleAnswer& StarMinimalOracle::answer(const Face& s) const {
  auto it = cache_.find(s);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(s, query_(s)).first->second;
}

StarMinimalOracle distance_oracle(const GeometricComplex& G, const Vec& w) {
  return StarMinimalOracle([G, w](const Face& s) {
    ClosestPoint cp;
    try {
      cp = closest_point_on_star(w, s, G);
    } catch (const TopoError& e) {
      if (e.kind() == ErrorKind::NonUniqueMinimum)
        throw TopoError(ErrorKind::StarMinimalityViolation, "star of " + to_string(s) + ": " + e.what());
      throw;
    }
    int best = -1;
    Q bd;
    for (int v : cp.carrier) {
      Q d = norm2(sub(G.at(v), w));
      if (best < 0 || d < bd || (d == bd && v < best)) {
        best = v;
        bd = d;
      }
    }
    return OracleAnswer{cp.carrier, best};
  });
}

std::vector<long> MorseMatching::morse_vector() const {
  std::vector<long> c;
  for (const auto& pr : pairs)
    if (c.size() < pr.second.size()) c.resize(pr.second.size(), 0);
  for (const Face& f : critical) {
    size_t d = f.size() - 1;
    if (c.size() <= d) c.resize(d + 1, 0);
    ++c[d];
  }
  return c;
}

MorseMatching gradient_matching(const SimplicialComplex& C, const StarMinimalOracle& oracle) {
  MorseMatching M;
  FaceSet image;
  for (const Face& s : C.sorted_faces()) {
    if (image.count(s)) continue;
    const OracleAnswer& a = oracle.answer(s);
    Face st = face_union(a.mu, s);
    if (!C.contains(st) || !contains_vertex(a.mu, a.y))
      throw TopoError(ErrorKind::OracleInconsistency, "answer for " + to_string(s) + " leaves its star");
    if (contains_vertex(s, a.y)) {
      M.critical.push_back(s);
      continue;
    }
    Face T = face_with(s, a.y);
    if (!C.contains(T)) throw TopoError(ErrorKind::JoinMissing, to_string(T));
    if (!image.insert(T).second)
      throw TopoError(ErrorKind::OracleInconsistency, "two faces matched to " + to_string(T));
    M.pairs.push_back({s, T});
  }
  return M;
}

AcyclicityResult is_acyclic(const VectorField& V, const SimplicialComplex& C) {
  (void)C;
  FaceMap<int> by_free;
  for (size_t i = 0; i < V.size(); ++i) by_free[V[i].first] = static_cast<int>(i);
  std::vector<std::vector<int>> next(V.size());
  for (size_t i = 0; i < V.size(); ++i)
    for (const Face& t : boundary_faces(V[i].second)) {
      if (t == V[i].first) continue;
      auto it = by_free.find(t);
      if (it != by_free.end()) next[i].push_back(it->second);
    }
  // iterative DFS with colors; a back edge closes a gradient path
  std::vector<int> color(V.size(), 0), parent(V.size(), -1);
  for (size_t r = 0; r < V.size(); ++r) {
    if (color[r]) continue;
    std::vector<std::pair<int, size_t>> stack{{static_cast<int>(r), 0}};
    color[r] = 1;
    while (!stack.empty()) {
      auto& [u, k] = stack.back();
      if (k < next[u].size()) {
        int w = next[u][k++];
        if (color[w] == 0) {
          color[w] = 1;
          parent[w] = u;
          stack.push_back({w, 0});
        } else if (color[w] == 1) {
          AcyclicityResult res{false, {}};
          std::vector<int> cyc{w};
          for (int x = u; x != w; x = parent[x]) cyc.push_back(x);
          std::reverse(cyc.begin() + 1, cyc.end());
          for (int x : cyc) res.cycle.push_back(V[x]);
          return res;
        }
      } else {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

std::vector<std::pair<int, Face>> predicted_critical_pairs(const SimplicialComplex& C, const StarMinimalOracle& oracle) {
  std::vector<std::pair<int, Face>> out;
  for (const Face& t : C.sorted_faces()) {
    int v = oracle.y(t);
    if (!contains_vertex(t, v)) continue;
    if (t.size() == 1 || oracle.y(face_without(t, v)) != v) out.push_back({v, t});
  }
  return out;
}

bool is_gradient_matching(const MorseMatching& M, const SimplicialComplex& C) {
  FaceMap<Face> theta;
  for (const auto& [s, S] : M.pairs) theta[s] = S;
  for (const auto& [s, S] : M.pairs) {
    int y = face_minus(S, s).front();
    bool some_facet = false;
    for (int fi : C.facets_containing(S)) {
      const Face& F = C.facets()[fi];
      Face free_part = face_minus(face_minus(F, s), Face{y});
      bool ok = true;
      size_t n = free_part.size();
      for (unsigned mask = 0; ok && mask < (1u << n); ++mask) {
        Face t = s;
        for (size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) t = face_with(t, free_part[i]);
        auto it = theta.find(t);
        ok = it != theta.end() && it->second == face_with(t, y);
      }
      if (ok) {
        some_facet = true;
        break;
      }
    }
    if (!some_facet) return false;
  }
  return true;
}

bool has_convex_stars(const GeometricComplex& G) {
  for (const Face& s : G.complex.sorted_faces()) {
    SimplicialComplex st = star(s, G.complex);
    if (!is_convex_support(G.restricted_to(st))) return false;
  }
  return true;
}

}  // namespace topo
