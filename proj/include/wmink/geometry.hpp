#pragma once

#include <utility>
#include <vector>

#include "wmink/types.hpp"

namespace wmink {

/// d-dimensional Hausdorff volume of the simplex whose vertices are the
/// columns of `simplex` (n rows, d+1 columns, d = cols-1 <= n).
double simplex_volume(const Matrix& simplex);

/// Orthonormal basis (columns) of the space orthogonal to `u`.
Matrix orthogonal_complement(const Vector& u);

/// Vector orthogonal to the rows of `rows` ((n-1) x n, full row rank),
/// computed as the formal determinant expansion. Zero vector when the rows
/// are rank deficient.
Vector generalized_cross(const Matrix& rows);

/// Indices of `points` ordered counterclockwise by angle around their mean
/// in the plane spanned by columns of `basis` (n x 2).
std::vector<int> angular_order(const std::vector<Vector>& points,
                               const Matrix& basis);

/// Convex hull of 2-d points, counterclockwise, no repeated endpoint.
std::vector<Eigen::Vector2d> convex_hull_2d(std::vector<Eigen::Vector2d> pts);

/// Area of a counterclockwise 2-d polygon.
double polygon_area_2d(const std::vector<Eigen::Vector2d>& poly);

/// Splits a simplex along the hyperplane {<x,theta> = c} into pieces lying in
/// the closed halfspaces. Pieces are simplices of the same dimension; their
/// union is the input and overlaps have measure zero.
struct SplitSimplices {
  std::vector<Matrix> nonnegative;  // <x,theta> >= c
  std::vector<Matrix> nonpositive;  // <x,theta> <= c
};
SplitSimplices split_simplex(const Matrix& simplex, const Vector& theta,
                             double c = 0.0, double on_tol = 1e-13);

/// Longest-edge bisection of a simplex into two children.
std::pair<Matrix, Matrix> bisect_simplex(const Matrix& simplex);

}  // namespace wmink
