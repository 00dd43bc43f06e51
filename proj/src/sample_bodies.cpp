#include "wmink/sample_bodies.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wmink {

SymmetricPolytope unit_square() {
  Matrix normals(4, 2);
  normals << 1, 0, 0, 1, -1, 0, 0, -1;
  return SymmetricPolytope::from_halfspaces(normals, Vector::Ones(4));
}

SymmetricPolytope unit_cube() {
  Matrix normals(6, 3);
  normals << 1, 0, 0, 0, 1, 0, 0, 0, 1, -1, 0, 0, 0, -1, 0, 0, 0, -1;
  return SymmetricPolytope::from_halfspaces(normals, Vector::Ones(6));
}

SymmetricPolytope cross_polytope_2d() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix normals(4, 2);
  normals << s, s, s, -s, -s, -s, -s, s;
  return SymmetricPolytope::from_halfspaces(normals, Vector::Constant(4, s));
}

SymmetricPolytope octahedron() {
  const double s = 1.0 / std::sqrt(3.0);
  Matrix normals(8, 3);
  normals << s, s, s, s, s, -s, s, -s, s, s, -s, -s,
      -s, -s, -s, -s, -s, s, -s, s, -s, -s, s, s;
  return SymmetricPolytope::from_halfspaces(normals, Vector::Constant(8, s));
}

SymmetricPolytope regular_polygon(int m, double inradius) {
  Matrix normals(2 * m, 2);
  for (int k = 0; k < m; ++k) {
    const double angle = M_PI * k / m;
    normals.row(k) << std::cos(angle), std::sin(angle);
    normals.row(m + k) << -std::cos(angle), -std::sin(angle);
  }
  return SymmetricPolytope::from_halfspaces(normals,
                                            Vector::Constant(2 * m, inradius));
}

WeightedDensity axis_density(int n) {
  Vector e1 = Vector::Zero(n);
  e1[0] = 1.0;
  return WeightedDensity::abs_linear(e1);
}

SymmetricPolytope random_symmetric_polytope(int n, int pairs,
                                            RngSequence& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vector> dirs;
    for (int k = 0; k < n; ++k) {
      Vector e = Vector::Zero(n);
      e[k] = 1.0;
      dirs.push_back(e);
    }
    while (static_cast<int>(dirs.size()) < pairs) {
      Vector u = rng.unit_vector(n);
      bool fresh = true;
      for (const auto& v : dirs)
        fresh = fresh && (v - u).norm() > 5e-2 && (v + u).norm() > 5e-2;
      if (fresh) dirs.push_back(u);
    }
    Matrix normals(2 * pairs, n);
    Vector offsets(2 * pairs);
    for (int i = 0; i < pairs; ++i) {
      normals.row(i) = dirs[i].transpose();
      normals.row(pairs + i) = -dirs[i].transpose();
      offsets[i] = rng.next(0.7, 1.5);
      offsets[pairs + i] = offsets[i];
    }
    const auto body = SymmetricPolytope::from_halfspaces(normals, offsets);

    std::vector<int> alive;
    for (int i = 0; i < pairs; ++i)
      if (!body.faces()[i].empty() && !body.faces()[pairs + i].empty())
        alive.push_back(i);
    if (static_cast<int>(alive.size()) < n) continue;
    if (static_cast<int>(alive.size()) == pairs) return body;

    Matrix kept(2 * alive.size(), n);
    Vector kept_offsets(2 * alive.size());
    for (std::size_t j = 0; j < alive.size(); ++j) {
      kept.row(static_cast<Index>(j)) = normals.row(alive[j]);
      kept.row(static_cast<Index>(j + alive.size())) =
          normals.row(pairs + alive[j]);
      kept_offsets[static_cast<Index>(j)] = offsets[alive[j]];
      kept_offsets[static_cast<Index>(j + alive.size())] = offsets[alive[j]];
    }
    return SymmetricPolytope::from_halfspaces(kept, kept_offsets);
  }
  throw std::runtime_error("random_symmetric_polytope: generation failed");
}

SymmetricPolytope random_zonotope(int n, int m, RngSequence& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix gens(m, n);
    for (int i = 0; i < m; ++i)
      gens.row(i) = (rng.next(0.4, 1.2) * rng.unit_vector(n)).transpose();
    try {
      return Zonotope(gens).realize();
    } catch (const DegenerateGenerators&) {
      continue;
    } catch (const DegenerateInput&) {
      continue;
    }
  }
  throw std::runtime_error("random_zonotope: generation failed");
}

}  // namespace wmink
