#pragma once

#include "wmink/body.hpp"
#include "wmink/density.hpp"
#include "wmink/rng.hpp"

namespace wmink {

/// Canonical bodies used across checks and the verification suite.
SymmetricPolytope unit_square();                   // [-1,1]^2
SymmetricPolytope unit_cube();                     // [-1,1]^3
SymmetricPolytope cross_polytope_2d();             // conv{+-e1, +-e2}
SymmetricPolytope octahedron();                    // conv{+-e_i} in R^3
/// Regular 2m-gon in H-form with the given inradius.
SymmetricPolytope regular_polygon(int m, double inradius = 1.0);

/// |<x, e1>| density in dimension n.
WeightedDensity axis_density(int n);

/// Random symmetric polytope with `pairs` antipodal normal pairs (axes
/// included) and offsets in [0.7, 1.5]; redundant halfspaces are dropped, so
/// every face is nonempty.
SymmetricPolytope random_symmetric_polytope(int n, int pairs, RngSequence& rng);

/// Realization of a random zonotope with m generators.
SymmetricPolytope random_zonotope(int n, int m, RngSequence& rng);

}  // namespace wmink
