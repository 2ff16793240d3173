#pragma once

#include "topo/certificate.hpp"
#include "topo/geometry.hpp"
#include "topo/search.hpp"

#include <cstdint>
#include <optional>

namespace topo {

struct StarCollapse {
  GeometricComplex complex;  // sd^{d-2} G, realized
  NECertificate cert;        // non-evasiveness of `complex`
  int subdivisions = 0;      // d - 2
};

struct StarCollapseOptions {
  uint64_t seed = 0;
  SearchBudget budget{};
  int max_directions = 20;
  int max_eps_steps = 24;  // ε = 2^-1, ..., 2^-max_eps_steps for link realizations
};

// sd^{d-2} G is non-evasive when |G| is star-shaped around x (d = 2, 3).
StarCollapse collapse_star_shaped(const GeometricComplex& G, const Vec& x, const StarCollapseOptions& opt = {});

// Facets of a pure 2-complex in the plane are non-degenerate and every interior
// edge has its two triangles on opposite sides.
bool is_locally_embedded_2d(const GeometricComplex& G);

// Realizes the part of the link of vertex v lying below v (w.r.t. nu) as a planar
// complex: N(lower link, link), vertex ids given by `label` on faces of Lk(v).
// The cut points on the equator are pulled into the lower side by eps.
GeometricComplex realize_lower_link(const GeometricComplex& G, int v, const Vec& nu, const Q& eps,
                                    const std::function<int(const Face&)>& label, Vec* center_dir = nullptr,
                                    const Vec* center = nullptr);

}  // namespace topo
