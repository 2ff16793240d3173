#pragma once

#include "topo/certificate.hpp"
#include "topo/complex.hpp"
#include "topo/subdivision.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace topo {

// apex * B collapses onto apex * B' (a point when B' is void).
CollapseCertificate cone_collapse(int apex, const SimplicialComplex& B, const SimplicialComplex& Bsub);

// Given Lk(v, C) ↘ S, C collapses to (C - v) ∪ (v * S). With remove_vertex the
// link certificate must end at a point p and the pair (v, vp) is appended, so
// the result is C - v.
CollapseCertificate lift_link_collapse(const SimplicialComplex& C, int v, const CollapseCertificate& link_cert,
                                       bool remove_vertex);

// From C ↘ C' and a complex D with D ∩ C = C', certifies D ∪ C ↘ D.
CollapseCertificate union_collapse(const SimplicialComplex& C, const CollapseCertificate& cert, const SimplicialComplex& D);

// Smallest vertex lying in every facet, or -1.
int cone_apex(const SimplicialComplex& K);
// Deletes the non-apex vertices one by one; every link is again a cone.
NECertificate cone_ne_certificate(const SimplicialComplex& K, int apex);

// Non-evasive complexes collapse to a point.
CollapseCertificate ne_to_collapse(const SimplicialComplex& K, const NECertificate& cert);

using FaceLabel = std::function<int(const Face&)>;

// Vertex labels of sd K induced by a labelling of the faces of K.
SimplicialComplex labelled_sd(const SimplicialComplex& K, const FaceLabel& id);

// NE steps on K lifted to NE steps on sd K (labelled by `id`). The final
// complex is written to `final_sd` when given.
std::vector<NEStep> lift_ne_steps_once(const SimplicialComplex& K, const std::vector<NEStep>& steps, const FaceLabel& id,
                                       SimplicialComplex* final_sd = nullptr);
NECertificate lift_ne_tree(const SimplicialComplex& K, const NECertificate& cert, const FaceLabel& id);

// Successive derived subdivisions sd C, sd sd C, ... (m levels).
std::vector<DerivedComplex> sd_tower(const SimplicialComplex& C, int m);

// C ↘NE C' (given as steps from C) lifted to sd^m C ↘NE sd^m C'.
NESequence lift_ne_steps(const SimplicialComplex& C, const NESequence& seq, int m);
// (sd^m C) - v ↘NE sd^m (C - v).
NESequence ne_cone_lemma_steps(const SimplicialComplex& C, int v, int m);
// Id of the vertex of sd^m C standing for vertex v of C.
int iterated_vertex_id(const std::vector<DerivedComplex>& tower, int v);

std::vector<std::pair<Face, Face>> collapse_to_matching(const CollapseCertificate& cert);
// Orders an acyclic matching into collapse steps; throws Precondition when stuck.
CollapseCertificate matching_to_collapse(const SimplicialComplex& C, const std::vector<std::pair<Face, Face>>& pairs);

}  // namespace topo
