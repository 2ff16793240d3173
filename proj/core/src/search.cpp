#include "topo/search.hpp"

#include "collapse_state.hpp"
#include "topo/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <unordered_set>

namespace topo {

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
    case SearchStatus::ProvedImpossible: return "ProvedImpossible";
  }
  return "?";
}

namespace {

using detail::CollapseState;

std::vector<bool> protected_cells(const CollapseState& st, const std::optional<std::vector<Face>>& target) {
  std::vector<bool> prot(st.size(), false);
  if (!target) return prot;
  std::vector<int> stack;
  for (const Face& t : *target) {
    int i = st.find(t);
    if (i < 0) throw TopoError(ErrorKind::NotSubcomplex, "target cell " + to_string(t) + " not in complex");
    stack.push_back(i);
  }
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (prot[i]) continue;
    prot[i] = true;
    for (int f : st.facets(i)) stack.push_back(f);
  }
  return prot;
}

struct MaskHash {
  size_t operator()(const std::vector<uint64_t>& m) const noexcept {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : m) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

class CollapseDFS {
 public:
  CollapseDFS(CollapseState& st, std::vector<bool> prot, int goal, SearchBudget b)
      : st_(st), prot_(std::move(prot)), goal_(goal), budget_(b), rng_(b.seed) {}

  bool run() {
    if (++nodes_ > budget_.max_nodes) {
      exceeded_ = true;
      return false;
    }
    if (st_.present_count() == goal_) return true;
    std::vector<uint64_t> key = pack();
    if (failed_.count(key)) return false;
    std::vector<std::pair<int, int>> moves;
    for (int i = 0; i < st_.size(); ++i) {
      if (prot_[i]) continue;
      int S = st_.free_partner(i);
      if (S >= 0 && !prot_[S]) moves.push_back({i, S});
    }
    std::shuffle(moves.begin(), moves.end(), rng_);
    std::stable_sort(moves.begin(), moves.end(),
                     [&](const auto& a, const auto& b) { return st_.dim(a.second) > st_.dim(b.second); });
    for (auto [s, S] : moves) {
      st_.remove_pair(s, S);
      steps_.push_back({st_.cell(s), st_.cell(S)});
      if (run()) return true;
      steps_.pop_back();
      st_.restore_pair(s, S);
      if (exceeded_) return false;
    }
    failed_.insert(std::move(key));
    return false;
  }

  long nodes() const { return nodes_; }
  bool exceeded() const { return exceeded_; }
  const std::vector<CollapseStep>& steps() const { return steps_; }

 private:
  std::vector<uint64_t> pack() const {
    std::vector<uint64_t> m((st_.size() + 63) / 64, 0);
    for (int i = 0; i < st_.size(); ++i)
      if (st_.present(i)) m[i / 64] |= (uint64_t{1} << (i % 64));
    return m;
  }

  CollapseState& st_;
  std::vector<bool> prot_;
  int goal_;
  SearchBudget budget_;
  std::mt19937_64 rng_;
  long nodes_ = 0;
  bool exceeded_ = false;
  std::vector<CollapseStep> steps_;
  std::unordered_set<std::vector<uint64_t>, MaskHash> failed_;
};

std::vector<Face> final_target(const CollapseState& st, const std::optional<std::vector<Face>>& target) {
  if (target) return *target;
  for (int i = 0; i < st.size(); ++i)
    if (st.present(i)) return {st.cell(i)};
  return {};
}

template <class Complex>
CollapseSearchResult search_impl(const Complex& C, const std::optional<std::vector<Face>>& target, SearchBudget budget) {
  CollapseState st(C);
  std::vector<bool> prot = protected_cells(st, target);
  int goal = 1;
  long chi_target = 1, chi = 0;
  if (target) {
    goal = 0;
    chi_target = 0;
    for (int i = 0; i < st.size(); ++i)
      if (prot[i]) {
        ++goal;
        chi_target += (st.dim(i) % 2 == 0) ? 1 : -1;
      }
  }
  for (int i = 0; i < st.size(); ++i) chi += (st.dim(i) % 2 == 0) ? 1 : -1;
  CollapseSearchResult res;
  if (chi != chi_target) {
    res.status = SearchStatus::ProvedImpossible;
    res.note = "Euler characteristic " + std::to_string(chi) + " differs from target " + std::to_string(chi_target);
    return res;
  }
  CollapseDFS dfs(st, prot, goal, budget);
  bool ok = dfs.run();
  res.nodes = dfs.nodes();
  if (ok) {
    CollapseCertificate cert{dfs.steps(), final_target(st, target)};
    require_valid(verify_certificate(C, cert), "collapse search");
    res.status = SearchStatus::Found;
    res.cert = std::move(cert);
  } else if (dfs.exceeded()) {
    res.status = SearchStatus::BudgetExceeded;
    res.note = "node budget exhausted";
  } else {
    res.status = SearchStatus::ProvedImpossible;
    res.note = res.nodes == 1 ? "no free faces" : "search tree exhausted";
  }
  return res;
}

template <class Complex>
GreedyResult greedy_impl(const Complex& C, const std::optional<std::vector<Face>>& target) {
  CollapseState st(C);
  std::vector<bool> prot = protected_cells(st, target);
  int goal = 1;
  if (target) goal = static_cast<int>(std::count(prot.begin(), prot.end(), true));
  GreedyResult res;
  // highest dimension first keeps the remaining complex "fat", which helps on manifolds
  std::deque<int> queue;
  std::vector<int> order(st.size());
  for (int i = 0; i < st.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return st.dim(a) > st.dim(b); });
  for (int i : order) queue.push_back(i);
  while (!queue.empty() && st.present_count() > goal) {
    int i = queue.front();
    queue.pop_front();
    if (prot[i] || !st.present(i)) continue;
    int S = st.free_partner(i);
    if (S < 0 || prot[S]) continue;
    st.remove_pair(i, S);
    res.cert.steps.push_back({st.cell(i), st.cell(S)});
    for (int f : st.facets(S))
      if (st.present(f)) queue.push_back(f);
    for (int f : st.facets(i))
      if (st.present(f)) queue.push_back(f);
  }
  res.reached = st.present_count() == goal;
  if (res.reached) res.cert.target = final_target(st, target);
  return res;
}

template <class Complex>
CollapseCertificate onto_impl(const Complex& C, const std::optional<std::vector<Face>>& target, SearchBudget budget) {
  GreedyResult g = greedy_impl(C, target);
  if (g.reached) {
    require_valid(verify_certificate(C, g.cert), "greedy collapse");
    return g.cert;
  }
  CollapseSearchResult r = search_impl(C, target, budget);
  if (r.status == SearchStatus::Found) return *r.cert;
  if (r.status == SearchStatus::BudgetExceeded) throw TopoError(ErrorKind::BudgetExceeded, "collapse search: " + r.note);
  throw TopoError(ErrorKind::Precondition, "complex does not collapse onto the target: " + r.note);
}

}  // namespace

CollapseSearchResult collapse_search(const CellComplex& C, const std::optional<std::vector<Face>>& target, SearchBudget b) {
  return search_impl(C, target, b);
}
CollapseSearchResult collapse_search(const SimplicialComplex& C, const std::optional<std::vector<Face>>& target,
                                     SearchBudget b) {
  return search_impl(C, target, b);
}
GreedyResult greedy_collapse(const CellComplex& C, const std::optional<std::vector<Face>>& target) {
  return greedy_impl(C, target);
}
GreedyResult greedy_collapse(const SimplicialComplex& C, const std::optional<std::vector<Face>>& target) {
  return greedy_impl(C, target);
}
CollapseCertificate collapse_onto(const SimplicialComplex& C, const std::optional<std::vector<Face>>& target,
                                  SearchBudget b) {
  return onto_impl(C, target, b);
}
CollapseCertificate collapse_onto(const CellComplex& C, const std::optional<std::vector<Face>>& target, SearchBudget b) {
  return onto_impl(C, target, b);
}

NECertificate tree_certificate(const SimplicialComplex& C) {
  if (C.empty() || C.dim() > 1) return nullptr;
  std::map<int, std::vector<int>> adj;
  for (int v : C.vertices()) adj[v];
  long edges = 0;
  for (const Face& f : C.faces_of_dim(1)) {
    adj[f[0]].push_back(f[1]);
    adj[f[1]].push_back(f[0]);
    ++edges;
  }
  if (edges != static_cast<long>(adj.size()) - 1) return nullptr;
  std::map<int, int> deg;
  for (auto& [v, nb] : adj) deg[v] = static_cast<int>(nb.size());
  std::vector<NEStep> steps;
  std::map<int, bool> gone;
  size_t left = adj.size();
  // repeatedly strip the smallest leaf
  while (left > 1) {
    int leaf = -1;
    for (auto& [v, d] : deg)
      if (!gone[v] && d == 1) {
        leaf = v;
        break;
      }
    if (leaf < 0) return nullptr;  // disconnected with a cycle elsewhere
    int nb = -1;
    for (int u : adj[leaf])
      if (!gone[u]) nb = u;
    steps.push_back({leaf, ne_point(nb)});
    gone[leaf] = true;
    --deg[nb];
    --left;
  }
  for (auto& [v, nb] : adj)
    if (!gone[v]) return ne_from_steps(steps, v);
  return nullptr;
}

namespace {

std::string facet_key(const SimplicialComplex& K) {
  std::string s;
  for (const Face& f : K.facets()) {
    for (int v : f) {
      s += std::to_string(v);
      s += ',';
    }
    s += ';';
  }
  return s;
}

class NESearch {
 public:
  explicit NESearch(SearchBudget b) : budget_(b) {}

  // Commits to the first vertex whose link is non-evasive; no backtracking over
  // the deletion chain, so memory stays flat on large complexes.
  NECertificate greedy(const SimplicialComplex& K0) {
    SimplicialComplex K = K0;
    std::vector<NEStep> steps;
    while (!K.is_point()) {
      if (K.empty() || K.euler() != 1) return nullptr;
      if (K.dim() <= 1) {
        NECertificate t = tree_certificate(K);
        if (!t) return nullptr;
        std::vector<NEStep> tail = ne_flatten(t);
        int last = -1;
        ne_flatten(t, &last);
        steps.insert(steps.end(), tail.begin(), tail.end());
        return ne_from_steps(steps, last);
      }
      bool moved = false;
      for (int v : vertex_order(K)) {
        NECertificate lc = exhaustive(link(Face{v}, K));
        if (exceeded_) return nullptr;
        if (!lc) continue;
        steps.push_back({v, lc});
        K = deletion(K, v);
        moved = true;
        break;
      }
      if (!moved) return nullptr;
    }
    return ne_from_steps(steps, K.vertices().front());
  }

  NECertificate exhaustive(const SimplicialComplex& K) {
    if (++nodes_ > budget_.max_nodes) {
      exceeded_ = true;
      return nullptr;
    }
    if (K.is_point()) return ne_point(K.vertices().front());
    if (K.empty() || K.dim() == 0 || K.euler() != 1) return nullptr;
    if (K.dim() == 1) return tree_certificate(K);
    std::string key = facet_key(K);
    if (evasive_.count(key)) return nullptr;
    for (int v : vertex_order(K)) {
      NECertificate lc = exhaustive(link(Face{v}, K));
      if (exceeded_) return nullptr;
      if (!lc) continue;
      NECertificate rc = exhaustive(deletion(K, v));
      if (exceeded_) return nullptr;
      if (rc) return ne_node(v, lc, rc);
    }
    evasive_.insert(key);
    return nullptr;
  }

  long nodes() const { return nodes_; }
  bool exceeded() const { return exceeded_; }

 private:
  // small links first: they are cheaper to certify and more often cones
  static std::vector<int> vertex_order(const SimplicialComplex& K) {
    std::vector<std::pair<size_t, int>> w;
    for (int v : K.vertices()) w.push_back({K.facets_at(v).size(), v});
    std::sort(w.begin(), w.end());
    std::vector<int> out;
    for (auto& p : w) out.push_back(p.second);
    return out;
  }

  SearchBudget budget_;
  long nodes_ = 0;
  bool exceeded_ = false;
  std::unordered_set<std::string> evasive_;
};

}  // namespace

NESearchResult is_non_evasive(const SimplicialComplex& C, SearchBudget budget) {
  NESearchResult res;
  if (C.empty()) return res;
  if (C.euler() != 1) return res;  // non-evasive complexes are contractible
  NESearch s(budget);
  NECertificate cert = s.greedy(C);
  if (!cert && !s.exceeded()) cert = s.exhaustive(C);
  res.nodes = s.nodes();
  if (cert) {
    require_valid(verify_ne(C, cert), "non-evasiveness search");
    res.status = SearchStatus::Found;
    res.cert = cert;
  } else {
    res.status = s.exceeded() ? SearchStatus::BudgetExceeded : SearchStatus::ProvedImpossible;
  }
  return res;
}

NECertificate non_evasive_certificate(const SimplicialComplex& C, SearchBudget budget) {
  NESearchResult r = is_non_evasive(C, budget);
  if (r.status == SearchStatus::Found) return r.cert;
  if (r.status == SearchStatus::BudgetExceeded) throw TopoError(ErrorKind::BudgetExceeded, "non-evasiveness search budget exhausted");
  throw TopoError(ErrorKind::Precondition, "complex is evasive");
}

}  // namespace topo
