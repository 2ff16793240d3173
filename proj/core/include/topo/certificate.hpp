#pragma once

#include "topo/cell_complex.hpp"
#include "topo/complex.hpp"

#include <memory>
#include <string>
#include <vector>

namespace topo {

struct CollapseStep {
  Face free;
  Face coface;
  bool operator==(const CollapseStep& o) const { return free == o.free && coface == o.coface; }
};

struct CollapseCertificate {
  std::vector<CollapseStep> steps;
  std::vector<Face> target;  // maximal cells of the final complex
};

// Non-evasiveness tree. A leaf (no link, no rest) certifies a single point.
struct NENode;
using NECertificate = std::shared_ptr<const NENode>;

struct NENode {
  int vertex = -1;
  NECertificate link;  // certifies the link of `vertex`
  NECertificate rest;  // certifies the deletion of `vertex`
  bool is_point() const { return !link && !rest; }
};

NECertificate ne_point(int v);
NECertificate ne_node(int v, NECertificate link, NECertificate rest);

// One non-evasiveness step: delete a vertex whose link is certified non-evasive.
struct NEStep {
  int vertex;
  NECertificate link;
};

struct NESequence {
  std::vector<NEStep> steps;
  std::vector<Face> target;  // facets of the final complex
};

// Appends a point certificate for the last remaining vertex.
NECertificate ne_from_steps(const std::vector<NEStep>& steps, int last_vertex);
std::vector<NEStep> ne_flatten(const NECertificate& cert, int* last_vertex = nullptr);
size_t ne_size(const NECertificate& cert);

struct VerifyResult {
  bool ok = true;
  long failing_step = -1;
  std::string reason;
  explicit operator bool() const { return ok; }
  static VerifyResult fail(long step, std::string why) { return {false, step, std::move(why)}; }
};

// Replays collapse steps; target comes from the certificate.
VerifyResult verify_certificate(const CellComplex& C, const CollapseCertificate& cert);
VerifyResult verify_certificate(const SimplicialComplex& C, const CollapseCertificate& cert);
VerifyResult verify_ne(const SimplicialComplex& C, const NECertificate& cert);
VerifyResult verify_ne_steps(const SimplicialComplex& C, const NESequence& seq);

std::vector<Face> free_faces(const SimplicialComplex& C);
std::vector<Face> free_faces(const CellComplex& C);
// Removes the free face s and its unique coface; throws NotFree otherwise.
SimplicialComplex elementary_collapse(const SimplicialComplex& C, const Face& s);

// Throws CertificateRejected with the verifier's reason.
void require_valid(const VerifyResult& r, const std::string& what);

}  // namespace topo
