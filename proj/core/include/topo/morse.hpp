#pragma once

#include "topo/complex.hpp"
#include "topo/geometry.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace topo {

struct OracleAnswer {
  Face mu;  // minimal face carrying the star minimum
  int y;    // preferred vertex of mu
};

// The only interface between metric data and the matching construction.
class StarMinimalOracle {
 public:
  using Query = std::function<OracleAnswer(const Face&)>;
  explicit StarMinimalOracle(Query q) : query_(std::move(q)) {}
  const OracleAnswer& answer(const Face& s) const;
  int y(const Face& s) const { return answer(s).y; }

 private:
  Query query_;
  mutable FaceMap<OracleAnswer> cache_;
};

// Squared distance to w; ties between vertices broken by id.
StarMinimalOracle distance_oracle(const GeometricComplex& G, const Vec& w);

using VectorField = std::vector<std::pair<Face, Face>>;

struct MorseMatching {
  VectorField pairs;
  std::vector<Face> critical;
  // c_0, c_1, ... up to the largest matched or critical dimension
  std::vector<long> morse_vector() const;
};

MorseMatching gradient_matching(const SimplicialComplex& C, const StarMinimalOracle& oracle);

struct AcyclicityResult {
  bool acyclic = true;
  VectorField cycle;  // closed gradient path when not acyclic
};
AcyclicityResult is_acyclic(const VectorField& V, const SimplicialComplex& C);

// Pairs (v, tau) with v in tau, y(tau) = v and y(tau - v) != v; (v, v) when y(v) = v.
std::vector<std::pair<int, Face>> predicted_critical_pairs(const SimplicialComplex& C, const StarMinimalOracle& oracle);

bool is_gradient_matching(const MorseMatching& M, const SimplicialComplex& C);

// Every vertex and ridge star has convex support.
bool has_convex_stars(const GeometricComplex& G);

}  // namespace topo
