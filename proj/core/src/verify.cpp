#include "topo/certificate.hpp"

#include "topo/errors.hpp"

#include <algorithm>
#include <unordered_map>

// The replay code below deliberately avoids the complex operations used by the
// producers: it works on raw face sets and its own incidence lists.

namespace topo {

NECertificate ne_point(int v) {
  auto n = std::make_shared<NENode>();
  n->vertex = v;
  return n;
}

NECertificate ne_node(int v, NECertificate link, NECertificate rest) {
  auto n = std::make_shared<NENode>();
  n->vertex = v;
  n->link = std::move(link);
  n->rest = std::move(rest);
  return n;
}

NECertificate ne_from_steps(const std::vector<NEStep>& steps, int last_vertex) {
  NECertificate cur = ne_point(last_vertex);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) cur = ne_node(it->vertex, it->link, cur);
  return cur;
}

std::vector<NEStep> ne_flatten(const NECertificate& cert, int* last_vertex) {
  std::vector<NEStep> out;
  const NENode* n = cert.get();
  while (n && !n->is_point()) {
    out.push_back({n->vertex, n->link});
    n = n->rest.get();
  }
  if (last_vertex) *last_vertex = n ? n->vertex : -1;
  return out;
}

size_t ne_size(const NECertificate& cert) {
  if (!cert) return 0;
  return 1 + ne_size(cert->link) + ne_size(cert->rest);
}

namespace {

bool subset_of(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

struct Replay {
  FaceMap<int> dim;  // every cell of the source with its dimension
  FaceSet present;
  std::unordered_map<int, std::vector<Face>> at;

  void add(const Face& c, int d) {
    dim[c] = d;
    present.insert(c);
    for (int v : c) at[v].push_back(c);
  }

  // Number of present cells strictly containing c, and one of them.
  int supersets(const Face& c, Face* witness) const {
    const std::vector<Face>* best = nullptr;
    for (int v : c) {
      auto it = at.find(v);
      if (it == at.end()) return 0;
      if (!best || it->second.size() < best->size()) best = &it->second;
    }
    int n = 0;
    for (const Face& g : *best) {
      if (g.size() < c.size() || g == c || !present.count(g) || !subset_of(c, g)) continue;
      if (g.size() == c.size()) continue;
      ++n;
      if (witness) *witness = g;
    }
    return n;
  }
};

VerifyResult replay(Replay& R, const CollapseCertificate& cert) {
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& [s, S] = cert.steps[i];
    long step = static_cast<long>(i);
    if (!R.present.count(s)) return VerifyResult::fail(step, "free face " + to_string(s) + " not present");
    if (!R.present.count(S)) return VerifyResult::fail(step, "coface " + to_string(S) + " not present");
    if (!subset_of(s, S) || s == S) return VerifyResult::fail(step, to_string(s) + " is not a proper face of " + to_string(S));
    if (R.dim.at(S) != R.dim.at(s) + 1) return VerifyResult::fail(step, "coface dimension mismatch at " + to_string(s));
    Face w;
    int n = R.supersets(s, &w);
    if (n != 1) return VerifyResult::fail(step, to_string(s) + " lies in " + std::to_string(n) + " other faces");
    if (w != S) return VerifyResult::fail(step, to_string(s) + " is free but its coface is " + to_string(w));
    R.present.erase(s);
    R.present.erase(S);
  }
  // final state must be exactly the closure of the target inside the source
  std::unordered_map<int, std::vector<const Face*>> tops;
  for (const Face& t : cert.target) {
    if (!R.dim.count(t)) return VerifyResult::fail(static_cast<long>(cert.steps.size()), "target cell " + to_string(t) + " not in source");
    for (int v : t) tops[v].push_back(&t);
  }
  for (const auto& [c, d] : R.dim) {
    (void)d;
    bool in_target = false;
    auto it = tops.find(c.front());
    if (it != tops.end())
      for (const Face* t : it->second)
        if (subset_of(c, *t)) {
          in_target = true;
          break;
        }
    if (in_target != static_cast<bool>(R.present.count(c)))
      return VerifyResult::fail(static_cast<long>(cert.steps.size()),
                                (in_target ? "target cell missing: " : "cell left over: ") + to_string(c));
  }
  return {};
}

void all_subsets(const Face& f, FaceSet& out) {
  size_t n = f.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Face g;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) g.push_back(f[i]);
    out.insert(std::move(g));
  }
}

VerifyResult ne_check(const FaceSet& K, const NENode* node, int depth);

// Walks the deletion chain of one complex; links recurse.
VerifyResult ne_check(const FaceSet& K0, const NENode* node, int depth) {
  FaceSet K = K0;
  std::unordered_map<int, std::vector<Face>> at;
  for (const Face& f : K)
    for (int v : f) at[v].push_back(f);
  long step = 0;
  while (true) {
    if (!node) return VerifyResult::fail(step, "missing certificate node at depth " + std::to_string(depth));
    if (node->is_point()) {
      if (K.size() == 1 && K.count(Face{node->vertex})) return {};
      return VerifyResult::fail(step, "expected the single point " + std::to_string(node->vertex) + ", found " +
                                          std::to_string(K.size()) + " faces at depth " + std::to_string(depth));
    }
    int v = node->vertex;
    if (!K.count(Face{v})) return VerifyResult::fail(step, "vertex " + std::to_string(v) + " not present");
    if (!node->link || !node->rest) return VerifyResult::fail(step, "incomplete node for vertex " + std::to_string(v));
    FaceSet lk;
    std::vector<Face> gone;
    for (const Face& f : at[v]) {
      if (!K.count(f)) continue;
      gone.push_back(f);
      if (f.size() > 1) {
        Face g;
        for (int u : f)
          if (u != v) g.push_back(u);
        lk.insert(std::move(g));
      }
    }
    if (lk.empty()) return VerifyResult::fail(step, "vertex " + std::to_string(v) + " has an empty link");
    VerifyResult r = ne_check(lk, node->link.get(), depth + 1);
    if (!r) {
      r.failing_step = step;
      r.reason = "link of " + std::to_string(v) + ": " + r.reason;
      return r;
    }
    for (const Face& f : gone) K.erase(f);
    node = node->rest.get();
    ++step;
  }
}

}  // namespace

VerifyResult verify_certificate(const CellComplex& C, const CollapseCertificate& cert) {
  Replay R;
  for (const Face& c : C.cells()) R.add(c, C.dim_of(c));
  return replay(R, cert);
}

VerifyResult verify_certificate(const SimplicialComplex& C, const CollapseCertificate& cert) {
  Replay R;
  for (const Face& f : C.faces()) R.add(f, static_cast<int>(f.size()) - 1);
  return replay(R, cert);
}

VerifyResult verify_ne(const SimplicialComplex& C, const NECertificate& cert) {
  if (C.empty()) return VerifyResult::fail(0, "the void complex is evasive");
  return ne_check(C.faces(), cert.get(), 0);
}

VerifyResult verify_ne_steps(const SimplicialComplex& C, const NESequence& seq) {
  FaceSet K = C.faces();
  std::unordered_map<int, std::vector<Face>> at;
  for (const Face& f : K)
    for (int v : f) at[v].push_back(f);
  for (size_t i = 0; i < seq.steps.size(); ++i) {
    int v = seq.steps[i].vertex;
    long step = static_cast<long>(i);
    if (!K.count(Face{v})) return VerifyResult::fail(step, "vertex " + std::to_string(v) + " not present");
    FaceSet lk;
    std::vector<Face> gone;
    for (const Face& f : at[v]) {
      if (!K.count(f)) continue;
      gone.push_back(f);
      if (f.size() > 1) {
        Face g;
        for (int u : f)
          if (u != v) g.push_back(u);
        lk.insert(std::move(g));
      }
    }
    if (lk.empty()) return VerifyResult::fail(step, "vertex " + std::to_string(v) + " has an empty link");
    VerifyResult r = ne_check(lk, seq.steps[i].link.get(), 1);
    if (!r) return VerifyResult::fail(step, "link of " + std::to_string(v) + ": " + r.reason);
    for (const Face& f : gone) K.erase(f);
  }
  FaceSet want;
  for (const Face& t : seq.target) all_subsets(t, want);
  if (want != K) return VerifyResult::fail(static_cast<long>(seq.steps.size()), "final complex differs from target");
  return {};
}

std::vector<Face> free_faces(const CellComplex& C) {
  Replay R;
  for (const Face& c : C.cells()) R.add(c, C.dim_of(c));
  std::vector<Face> out;
  for (const Face& c : C.sorted_cells())
    if (R.supersets(c, nullptr) == 1) out.push_back(c);
  return out;
}

std::vector<Face> free_faces(const SimplicialComplex& C) { return free_faces(CellComplex::from_simplicial(C)); }

SimplicialComplex elementary_collapse(const SimplicialComplex& C, const Face& s) {
  if (!C.contains(s)) throw TopoError(ErrorKind::FaceNotInComplex, to_string(s));
  std::vector<Face> up = strict_cofaces(s, C);
  if (up.size() != 1) throw TopoError(ErrorKind::NotFree, to_string(s) + " lies in " + std::to_string(up.size()) + " faces");
  std::vector<Face> keep;
  for (const Face& f : C.faces())
    if (f != s && f != up[0]) keep.push_back(f);
  return SimplicialComplex::closure_of(keep);
}

void require_valid(const VerifyResult& r, const std::string& what) {
  if (!r.ok)
    throw TopoError(ErrorKind::CertificateRejected,
                    what + ": step " + std::to_string(r.failing_step) + ": " + r.reason);
}

}  // namespace topo
