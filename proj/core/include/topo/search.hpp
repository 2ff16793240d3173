#pragma once

#include "topo/cell_complex.hpp"
#include "topo/certificate.hpp"
#include "topo/complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace topo {

struct SearchBudget {
  long max_nodes = 200000;
  uint64_t seed = 0;
};

enum class SearchStatus { Found, BudgetExceeded, ProvedImpossible };
const char* status_name(SearchStatus s);

struct CollapseSearchResult {
  SearchStatus status = SearchStatus::ProvedImpossible;
  std::optional<CollapseCertificate> cert;
  long nodes = 0;
  std::string note;
};

// Backtracking search for a collapse of C onto target (maximal cells). With no
// target, any single vertex is accepted.
CollapseSearchResult collapse_search(const CellComplex& C, const std::optional<std::vector<Face>>& target,
                                     SearchBudget budget = {});
CollapseSearchResult collapse_search(const SimplicialComplex& C, const std::optional<std::vector<Face>>& target,
                                     SearchBudget budget = {});

struct GreedyResult {
  CollapseCertificate cert;
  bool reached = false;
};

// Removes free pairs outside the target until stuck. With no target, stops at a
// single vertex. Complete for contractible planar complexes of dimension <= 2.
GreedyResult greedy_collapse(const CellComplex& C, const std::optional<std::vector<Face>>& target);
GreedyResult greedy_collapse(const SimplicialComplex& C, const std::optional<std::vector<Face>>& target);

// Greedy first, exhaustive search as fallback; throws when neither succeeds.
CollapseCertificate collapse_onto(const SimplicialComplex& C, const std::optional<std::vector<Face>>& target,
                                  SearchBudget budget = {});
CollapseCertificate collapse_onto(const CellComplex& C, const std::optional<std::vector<Face>>& target,
                                  SearchBudget budget = {});

struct NESearchResult {
  SearchStatus status = SearchStatus::ProvedImpossible;
  NECertificate cert;
  long nodes = 0;
};

NESearchResult is_non_evasive(const SimplicialComplex& C, SearchBudget budget = {});
// Throws BudgetExceeded / Precondition when no certificate is found.
NECertificate non_evasive_certificate(const SimplicialComplex& C, SearchBudget budget = {});

// Leaf-deletion certificate for a tree; empty pointer when C is not a tree.
NECertificate tree_certificate(const SimplicialComplex& C);

}  // namespace topo
