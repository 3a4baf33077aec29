#pragma once

#include <vector>

#include "oracles.hpp"
#include "srcartier/simplicial_complex.hpp"

namespace fixtures {

using srcartier::build_complex;
using srcartier::SimplicialComplex;

/// Non-pure complex with no free face: a hollow tetrahedron with a
/// triangle of edges 1-5-2 attached.
inline SimplicialComplex nonpure_flap() {
  return build_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 5}, {2, 5}}, 5);
}
inline SimplicialComplex path() { return build_complex({{1, 2}, {2, 3}}, 3); }
inline SimplicialComplex hollow_triangle() { return build_complex({{1, 2}, {1, 3}, {2, 3}}, 3); }
inline SimplicialComplex solid_triangle() { return build_complex({{1, 2, 3}}, 3); }
inline SimplicialComplex cone_hollow_triangle() {
  return build_complex({{1, 2, 4}, {2, 3, 4}, {1, 3, 4}}, 4);
}
inline SimplicialComplex tetrahedron_boundary() {
  return build_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, 4);
}
inline SimplicialComplex two_disjoint_edges() { return build_complex({{1, 2}, {3, 4}}, 4); }
/// I_Δ = (x1x2, x2x3): an edge plus an isolated vertex, not a cone.
inline SimplicialComplex edge_and_point() { return build_complex({{1, 3}, {2}}, 3); }

inline std::vector<oracle::Mask> facet_masks(const SimplicialComplex& c) {
  std::vector<oracle::Mask> out;
  for (auto f : c.facets()) out.push_back(f.bits());
  return out;
}

inline srcartier::Face face(std::initializer_list<int> vs) { return srcartier::Face::from_vertices(vs); }

}  // namespace fixtures
