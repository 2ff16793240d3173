#include "topo/cubical_collapse.hpp"

#include "collapse_state.hpp"
#include "topo/errors.hpp"

#include <algorithm>

namespace topo {

CollapseCertificate facet_star_collapse(const CellComplex& P, const Face& mu) {
  std::vector<Face> tops = P.maximal_cells();
  if (tops.size() != 1) throw TopoError(ErrorKind::UnsupportedCell, "expected a single cell");
  const Face& V = tops.front();
  if (P.dim_of(V) + 1 != static_cast<int>(V.size()))
    throw TopoError(ErrorKind::UnsupportedCell, "cell is not a simplex; use the cube overload");
  if (!P.contains(mu) || mu == V) throw TopoError(ErrorKind::Precondition, "mu must be a proper face");
  Face opposite = face_minus(V, mu);
  int a = mu.front();
  Face rest = face_without(mu, a);
  std::vector<std::pair<Face, Face>> pairs;
  size_t n = rest.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Face r = opposite;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) r = face_with(r, rest[i]);
    pairs.push_back({r, face_with(r, a)});
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return dim_lex_less(y.second, x.second); });
  CollapseCertificate cert;
  for (auto& [s, S] : pairs) cert.steps.push_back({s, S});
  for (int u : opposite) cert.target.push_back(face_without(V, u));
  return cert;
}

CollapseCertificate facet_star_collapse(const CubicalComplex& K, const Box& P, const Box& mu) {
  size_t d = P.size();
  if (mu.size() != d) throw TopoError(ErrorKind::InputError, "box dimension mismatch");
  std::vector<size_t> fixed;  // free in P, fixed in mu
  for (size_t i = 0; i < d; ++i) {
    if (mu[i].first < P[i].first || mu[i].second > P[i].second)
      throw TopoError(ErrorKind::Precondition, "mu is not a face of P");
    if (P[i].first != P[i].second && mu[i].first == mu[i].second) fixed.push_back(i);
  }
  if (fixed.empty()) throw TopoError(ErrorKind::Precondition, "mu must be a proper face");
  auto in_star = [&](const Box& b) {
    for (size_t i : fixed)
      if (b[i].first == b[i].second && b[i].first == mu[i].first) return true;
    return false;
  };
  size_t i0 = fixed.front();
  int far = mu[i0].first == P[i0].first ? P[i0].second : P[i0].first;
  std::vector<std::pair<Box, Box>> pairs;
  for (const Box& b : box_faces(P)) {
    if (in_star(b) || b[i0].first != far || b[i0].second != far) continue;
    Box up = b;
    up[i0] = P[i0];
    pairs.push_back({b, up});
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    if (box_dim(x.second) != box_dim(y.second)) return box_dim(x.second) > box_dim(y.second);
    return x.second < y.second;
  });
  CollapseCertificate cert;
  for (auto& [s, S] : pairs) cert.steps.push_back({K.cell_of(s), K.cell_of(S)});
  for (size_t i : fixed) {
    Box f = P;
    f[i] = {mu[i].first, mu[i].first};
    cert.target.push_back(K.cell_of(f));
  }
  return cert;
}

namespace {

// Squared distance from w to the box and the face of the box carrying the minimum.
std::pair<long, Box> clamp(const Box& b, const IntPoint& w) {
  long d2 = 0;
  Box mu = b;
  for (size_t i = 0; i < b.size(); ++i) {
    auto [lo, hi] = b[i];
    if (w[i] <= lo) {
      mu[i] = {lo, lo};
      d2 += static_cast<long>(lo - w[i]) * (lo - w[i]);
    } else if (w[i] >= hi) {
      mu[i] = {hi, hi};
      d2 += static_cast<long>(w[i] - hi) * (w[i] - hi);
    }
  }
  return {d2, mu};
}

}  // namespace

CollapseCertificate collapse_cubical_cat0(const CubicalComplex& K, int w) {
  if (w < 0 || w >= static_cast<int>(K.num_vertices())) throw TopoError(ErrorKind::FaceNotInComplex, "root vertex");
  const IntPoint& wp = K.point(w);
  detail::CollapseState st(K.cells());
  CollapseCertificate cert;
  while (st.present_count() > 1) {
    std::vector<int> tops;
    for (int i = 0; i < st.size(); ++i)
      if (st.present(i) && st.up_count(i) == 0) tops.push_back(i);
    long best = -1;
    Box best_mu;
    for (int i : tops) {
      auto [d2, mu] = clamp(K.box_of(st.cell(i)), wp);
      if (d2 > best) {
        best = d2;
        best_mu = mu;
      }
    }
    for (int i : tops) {
      const Box& B = K.box_of(st.cell(i));
      if (clamp(B, wp).second == best_mu && box_dim(B) == box_dim(best_mu))
        throw TopoError(ErrorKind::StarMinimalityViolation, "distance minimum of " + to_string(st.cell(i)) + " is not on its boundary");
    }
    for (int i : tops) {
      const Box& B = K.box_of(st.cell(i));
      if (clamp(B, wp).second != best_mu) continue;
      for (const auto& step : facet_star_collapse(K, B, best_mu).steps) {
        int s = st.id(step.free), S = st.id(step.coface);
        if (!st.present(s) && !st.present(S)) continue;
        if (st.free_partner(s) != S)
          throw TopoError(ErrorKind::StarMinimalityViolation,
                          "face " + to_string(step.free) + " not free while collapsing towards " + to_string(K.cell_of(best_mu)));
        st.remove_pair(s, S);
        cert.steps.push_back(step);
      }
    }
  }
  if (!st.present(st.id(Face{w}))) throw TopoError(ErrorKind::StarMinimalityViolation, "collapse ended away from the root");
  cert.target = {Face{w}};
  require_valid(verify_certificate(K.cells(), cert), "cubical collapse");
  return cert;
}

}  // namespace topo
