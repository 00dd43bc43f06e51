#include "wmink/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wmink {

double simplex_volume(const Matrix& simplex) {
  const Index d = simplex.cols() - 1;
  if (d <= 0) return 0.0;
  Matrix edges(simplex.rows(), d);
  for (Index j = 0; j < d; ++j)
    edges.col(j) = simplex.col(j + 1) - simplex.col(0);
  const double gram = (edges.transpose() * edges).determinant();
  if (gram <= 0.0) return 0.0;
  double factorial = 1.0;
  for (Index k = 2; k <= d; ++k) factorial *= static_cast<double>(k);
  return std::sqrt(gram) / factorial;
}

Matrix orthogonal_complement(const Vector& u) {
  const Index n = u.size();
  Eigen::JacobiSVD<Matrix> svd(u.transpose(), Eigen::ComputeFullV);
  // Last n-1 right singular vectors span the kernel of u^T.
  Matrix v = svd.matrixV();
  return v.rightCols(n - 1);
}

Vector generalized_cross(const Matrix& rows) {
  const Index n = rows.cols();
  Vector out = Vector::Zero(n);
  Matrix minor(n - 1, n - 1);
  double sign = 1.0;
  for (Index k = 0; k < n; ++k) {
    Index c = 0;
    for (Index j = 0; j < n; ++j) {
      if (j == k) continue;
      minor.col(c++) = rows.col(j);
    }
    out[k] = sign * minor.determinant();
    sign = -sign;
  }
  return out;
}

std::vector<int> angular_order(const std::vector<Vector>& points,
                               const Matrix& basis) {
  Vector mean = Vector::Zero(basis.rows());
  for (const auto& p : points) mean += p;
  mean /= static_cast<double>(points.size());

  std::vector<double> angle(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vector rel = points[i] - mean;
    angle[i] = std::atan2(basis.col(1).dot(rel), basis.col(0).dot(rel));
  }
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return angle[a] < angle[b]; });
  return order;
}

std::vector<Eigen::Vector2d> convex_hull_2d(std::vector<Eigen::Vector2d> pts) {
  if (pts.size() < 3) return pts;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a,
                  const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) -
           (a.y() - o.y()) * (b.x() - o.x());
  };
  std::vector<Eigen::Vector2d> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double polygon_area_2d(const std::vector<Eigen::Vector2d>& poly) {
  double twice = 0.0;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % m];
    twice += a.x() * b.y() - b.x() * a.y();
  }
  return 0.5 * std::abs(twice);
}

namespace {

void split_recursive(const Matrix& simplex, const Vector& theta, double c,
                     double on_tol, SplitSimplices& out) {
  const Index m = simplex.cols();
  Vector s(m);
  for (Index j = 0; j < m; ++j) s[j] = theta.dot(simplex.col(j)) - c;

  Index pos = -1, neg = -1;
  for (Index a = 0; a < m && pos < 0; ++a) {
    if (s[a] <= on_tol) continue;
    for (Index b = 0; b < m; ++b) {
      if (s[b] < -on_tol) {
        pos = a;
        neg = b;
        break;
      }
    }
  }
  if (pos < 0) {
    // Entirely on one closed side.
    bool any_neg = false;
    for (Index j = 0; j < m; ++j) any_neg = any_neg || s[j] < -on_tol;
    (any_neg ? out.nonpositive : out.nonnegative).push_back(simplex);
    return;
  }

  const double t = s[pos] / (s[pos] - s[neg]);
  const Vector crossing =
      simplex.col(pos) + t * (simplex.col(neg) - simplex.col(pos));
  Matrix child = simplex;
  child.col(neg) = crossing;
  split_recursive(child, theta, c, on_tol, out);
  child = simplex;
  child.col(pos) = crossing;
  split_recursive(child, theta, c, on_tol, out);
}

}  // namespace

SplitSimplices split_simplex(const Matrix& simplex, const Vector& theta,
                             double c, double on_tol) {
  SplitSimplices out;
  double scale = std::abs(c);
  for (Index j = 0; j < simplex.cols(); ++j)
    scale = std::max(scale, simplex.col(j).cwiseAbs().maxCoeff());
  split_recursive(simplex, theta, c, on_tol * std::max(1.0, scale), out);
  return out;
}

std::pair<Matrix, Matrix> bisect_simplex(const Matrix& simplex) {
  const Index m = simplex.cols();
  Index best_a = 0, best_b = 1;
  double best = -1.0;
  for (Index a = 0; a < m; ++a) {
    for (Index b = a + 1; b < m; ++b) {
      const double len = (simplex.col(a) - simplex.col(b)).squaredNorm();
      if (len > best) {
        best = len;
        best_a = a;
        best_b = b;
      }
    }
  }
  const Vector mid = 0.5 * (simplex.col(best_a) + simplex.col(best_b));
  Matrix left = simplex, right = simplex;
  left.col(best_b) = mid;
  right.col(best_a) = mid;
  return {left, right};
}

}  // namespace wmink
