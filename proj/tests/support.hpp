#pragma once

#include <cmath>
#include <vector>

#include "wmink/body.hpp"
#include "wmink/density.hpp"
#include "wmink/integrate.hpp"
#include "wmink/rng.hpp"
#include "wmink/sample_bodies.hpp"

namespace wmink::testing {

inline SymmetricPolytope make_sq2() { return unit_square(); }
inline SymmetricPolytope make_cu3() { return unit_cube(); }
inline SymmetricPolytope make_dia2() { return cross_polytope_2d(); }
inline SymmetricPolytope make_octahedron() { return octahedron(); }
inline SymmetricPolytope make_regular_polygon(int m, double inradius = 1.0) {
  return regular_polygon(m, inradius);
}
inline WeightedDensity make_x1(int n) { return axis_density(n); }

inline SymmetricPolytope random_body(int n, int pairs, RngSequence& rng) {
  return random_symmetric_polytope(n, pairs, rng);
}

using wmink::random_zonotope;

}  // namespace wmink::testing
