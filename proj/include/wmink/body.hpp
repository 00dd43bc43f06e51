#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wmink/types.hpp"

namespace wmink {

/// Facet of a symmetric polytope. Redundant halfspaces yield empty faces
/// (no vertices, zero area); they are kept so downstream measures and solver
/// residuals can reference every normal.
struct Face {
  Vector normal;
  double offset = 0.0;
  /// Face vertices; cyclically ordered for polygonal faces (n == 3).
  std::vector<Vector> vertices;
  /// Simplicial decomposition: each matrix holds the n vertices of an
  /// (n-1)-simplex as columns. Simplex volumes sum to area.
  std::vector<Matrix> simplices;
  double area = 0.0;

  bool empty() const { return simplices.empty(); }
};

/// Origin-symmetric polytope in H-representation with antipodally paired
/// normals (u_{N/2+i} = -u_i) and positive paired offsets. Vertices and faces
/// are enumerated exactly at construction; instances are immutable.
class SymmetricPolytope {
 public:
  SymmetricPolytope() = default;

  /// normals: N x n row matrix. Throws UnboundedBody when the normals do not
  /// span, DegenerateInput on broken pairing, duplicate normals, non-unit
  /// rows, or nonpositive offsets. Dimensions 2 <= n <= 4.
  static SymmetricPolytope from_halfspaces(const Matrix& normals,
                                           const Vector& offsets);

  int dim() const { return static_cast<int>(normals_.cols()); }
  Index facet_count() const { return normals_.rows(); }
  const Matrix& normals() const { return normals_; }
  const Vector& offsets() const { return offsets_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }

  /// h(x) = max over vertices of <x,y>; 1-homogeneous in x.
  double support(const Vector& x) const;

  SymmetricPolytope scaled(double t) const;

  double circumradius() const;
  /// Componentwise maximum |coordinate| over vertices.
  Vector box_halfwidth() const;
  /// Vertex pairs forming edges (1-faces).
  std::vector<std::pair<Index, Index>> edges() const;

 private:
  Matrix normals_;   // N x n
  Vector offsets_;   // N
  std::vector<Vector> vertices_;
  std::vector<std::vector<Index>> active_;  // constraint indices per vertex
  std::vector<Face> faces_;

  void build_faces();
};

/// Exact Minkowski sum for n <= 3, assembled in H-form from the support
/// function h_P + h_Q over the candidate facet normals of the sum.
SymmetricPolytope minkowski_sum(const SymmetricPolytope& P,
                                const SymmetricPolytope& Q);

struct ZonotopeCheck {
  bool zonotope = false;
  /// Human-readable description of a violating 2-face when not a zonotope.
  std::string certificate;
};

/// True iff every 2-dimensional face is centrally symmetric (always true in
/// the plane), the polytope criterion for being a projection body.
ZonotopeCheck is_zonotope(const SymmetricPolytope& P);

/// Minkowski sum of segments [-g_j, g_j].
class Zonotope {
 public:
  /// generators: m x n row matrix; throws DegenerateGenerators when the rows
  /// do not span R^n.
  explicit Zonotope(Matrix generators);

  const Matrix& generators() const { return generators_; }
  /// H-form realization; facet normals are orthogonal to (n-1)-subsets of
  /// generators and offsets are h(u) = sum_j |<u,g_j>|.
  SymmetricPolytope realize() const;

 private:
  Matrix generators_;
};

}  // namespace wmink
