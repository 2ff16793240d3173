#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace topo::test {

// Each check builds a random instance from the seed, runs the construction and
// verifies its output. Returns an empty string on success, else the reason.
std::string check_cone_collapse(uint64_t seed);
std::string check_link_collapse(uint64_t seed);
std::string check_union_collapse(uint64_t seed);
std::string check_cone_non_evasive(uint64_t seed);
std::string check_ne_lift(uint64_t seed);
std::string check_cone_lemma(uint64_t seed);

struct LemmaCheck {
  const char* name;
  std::string (*run)(uint64_t);
};
const std::vector<LemmaCheck>& lemma_checks();

}  // namespace topo::test
