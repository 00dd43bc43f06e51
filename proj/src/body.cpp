#include "wmink/body.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "wmink/geometry.hpp"

namespace wmink {

namespace {

constexpr double kVertexTol = 1e-9;     // after normalizing max offset to 1
constexpr double kPairingTol = 1e-12;

bool combination_next(std::vector<Index>& idx, Index N) {
  const Index k = static_cast<Index>(idx.size());
  Index i = k - 1;
  while (i >= 0 && idx[i] == N - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (Index j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

Index affine_rank(const std::vector<Vector>& pts, double tol) {
  if (pts.size() < 2) return 0;
  Matrix rel(pts[0].size(), static_cast<Index>(pts.size()) - 1);
  for (std::size_t i = 1; i < pts.size(); ++i)
    rel.col(static_cast<Index>(i) - 1) = pts[i] - pts[0];
  Eigen::JacobiSVD<Matrix> svd(rel);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * std::max(1.0, sv[0])) ++rank;
  return rank;
}

}  // namespace

SymmetricPolytope SymmetricPolytope::from_halfspaces(const Matrix& normals,
                                                     const Vector& offsets) {
  const Index N = normals.rows();
  const Index n = normals.cols();
  if (n < 2 || n > 4)
    throw DimensionTooLarge("from_halfspaces: supported dimensions are 2..4");
  if (N != offsets.size() || N % 2 != 0 || N < 2 * n)
    throw DegenerateInput("from_halfspaces: need N = offsets and N >= 2n, even");

  for (Index i = 0; i < N; ++i) {
    if (std::abs(normals.row(i).norm() - 1.0) > 1e-12)
      throw DegenerateInput("from_halfspaces: normals must be unit vectors");
    if (!(offsets[i] > 0.0))
      throw DegenerateInput("from_halfspaces: offsets must be positive");
  }
  const Index half = N / 2;
  for (Index i = 0; i < half; ++i) {
    if ((normals.row(half + i) + normals.row(i)).norm() > kPairingTol)
      throw DegenerateInput("from_halfspaces: antipodal pairing broken");
    if (std::abs(offsets[half + i] - offsets[i]) >
        kPairingTol * std::max(1.0, offsets[i]))
      throw DegenerateInput("from_halfspaces: offset pairing broken");
  }
  for (Index i = 0; i < N; ++i)
    for (Index j = i + 1; j < N; ++j)
      if ((normals.row(i) - normals.row(j)).norm() < 1e-12)
        throw DegenerateInput("from_halfspaces: coincident normals");

  {
    Eigen::JacobiSVD<Matrix> svd(normals);
    const auto& sv = svd.singularValues();
    if (sv[n - 1] < 1e-10 * sv[0])
      throw UnboundedBody("from_halfspaces: normals do not positively span");
  }

  SymmetricPolytope P;
  P.normals_ = normals;
  P.offsets_ = offsets;

  // Enumerate all n-subsets of active constraints at normalized scale.
  const double scale = offsets.maxCoeff();
  const Vector alpha = offsets / scale;

  std::vector<Vector> verts;
  std::vector<Index> idx(n);
  for (Index i = 0; i < n; ++i) idx[i] = i;
  Matrix U(n, n);
  Vector b(n);
  do {
    for (Index k = 0; k < n; ++k) {
      U.row(k) = normals.row(idx[k]);
      b[k] = alpha[idx[k]];
    }
    Eigen::FullPivLU<Matrix> lu(U);
    lu.setThreshold(1e-10);
    if (lu.rank() < n) continue;
    const Vector x = lu.solve(b);
    if ((normals * x - alpha).maxCoeff() > kVertexTol) continue;
    bool duplicate = false;
    for (const auto& v : verts) {
      if ((v - x).lpNorm<Eigen::Infinity>() < kVertexTol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) verts.push_back(x);
  } while (combination_next(idx, N));

  if (verts.size() < static_cast<std::size_t>(n + 1))
    throw DegenerateInput("from_halfspaces: degenerate vertex set");

  P.active_.resize(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    for (Index i = 0; i < N; ++i)
      if (std::abs(normals.row(i).dot(verts[v]) - alpha[i]) <= kVertexTol)
        P.active_[v].push_back(i);
  }

  P.vertices_.reserve(verts.size());
  for (auto& v : verts) P.vertices_.push_back(scale * v);

  P.build_faces();
  return P;
}

void SymmetricPolytope::build_faces() {
  const Index N = normals_.rows();
  const Index n = normals_.cols();
  const double scale = offsets_.maxCoeff();
  const double tol = kVertexTol * scale;

  faces_.resize(N);
  for (Index i = 0; i < N; ++i) {
    Face& F = faces_[i];
    F.normal = normals_.row(i).transpose();
    F.offset = offsets_[i];
    F.vertices.clear();
    F.simplices.clear();
    F.area = 0.0;

    std::vector<Index> members;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (std::binary_search(active_[v].begin(), active_[v].end(), i))
        members.push_back(static_cast<Index>(v));
    if (members.size() < static_cast<std::size_t>(n)) continue;

    std::vector<Vector> pts;
    pts.reserve(members.size());
    for (Index m : members) pts.push_back(vertices_[m]);
    if (affine_rank(pts, 1e-9) < n - 1) continue;  // lower-dimensional contact

    if (n == 2) {
      // Segment: two extreme points along the face direction.
      const Matrix basis = orthogonal_complement(F.normal);
      auto span = std::minmax_element(
          pts.begin(), pts.end(), [&](const Vector& a, const Vector& b) {
            return basis.col(0).dot(a) < basis.col(0).dot(b);
          });
      F.vertices = {*span.first, *span.second};
      Matrix simplex(2, 2);
      simplex.col(0) = *span.first;
      simplex.col(1) = *span.second;
      F.simplices.push_back(simplex);
    } else if (n == 3) {
      const Matrix basis = orthogonal_complement(F.normal);
      for (int o : angular_order(pts, basis)) F.vertices.push_back(pts[o]);
      for (std::size_t k = 1; k + 1 < F.vertices.size(); ++k) {
        Matrix tri(3, 3);
        tri.col(0) = F.vertices[0];
        tri.col(1) = F.vertices[k];
        tri.col(2) = F.vertices[k + 1];
        if (simplex_volume(tri) > tol * tol) F.simplices.push_back(tri);
      }
    } else {
      // 3-dimensional facet in R^4: cone from the facet centroid over its
      // polygonal 2-faces, each found as a doubly active vertex set.
      F.vertices = pts;
      Vector centroid = Vector::Zero(4);
      for (const auto& p : pts) centroid += p;
      centroid /= static_cast<double>(pts.size());

      std::set<std::vector<Index>> seen;
      for (Index j = 0; j < N; ++j) {
        if (j == i) continue;
        std::vector<Index> sub;
        std::vector<Vector> poly;
        for (Index m : members) {
          if (std::binary_search(active_[m].begin(), active_[m].end(), j)) {
            sub.push_back(m);
            poly.push_back(vertices_[m]);
          }
        }
        if (poly.size() < 3 || affine_rank(poly, 1e-9) != 2) continue;
        std::sort(sub.begin(), sub.end());
        if (!seen.insert(sub).second) continue;

        Matrix pair(2, 4);
        pair.row(0) = normals_.row(i);
        pair.row(1) = normals_.row(j);
        Eigen::JacobiSVD<Matrix> svd(pair, Eigen::ComputeFullV);
        const Matrix plane = svd.matrixV().rightCols(2);

        std::vector<Vector> ordered;
        for (int o : angular_order(poly, plane)) ordered.push_back(poly[o]);
        for (std::size_t k = 1; k + 1 < ordered.size(); ++k) {
          Matrix tet(4, 4);
          tet.col(0) = centroid;
          tet.col(1) = ordered[0];
          tet.col(2) = ordered[k];
          tet.col(3) = ordered[k + 1];
          if (simplex_volume(tet) > tol * tol * tol)
            F.simplices.push_back(tet);
        }
      }
    }
    for (const auto& s : F.simplices) F.area += simplex_volume(s);
    if (F.simplices.empty()) F.vertices.clear();
  }
}

double SymmetricPolytope::support(const Vector& x) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) best = std::max(best, x.dot(v));
  return best;
}

SymmetricPolytope SymmetricPolytope::scaled(double t) const {
  if (!(t > 0.0)) throw DomainError("scale factor must be positive");
  SymmetricPolytope P(*this);
  P.offsets_ *= t;
  for (auto& v : P.vertices_) v *= t;
  const double hausdorff = std::pow(t, dim() - 1);
  for (auto& F : P.faces_) {
    F.offset *= t;
    for (auto& v : F.vertices) v *= t;
    for (auto& s : F.simplices) s *= t;
    F.area *= hausdorff;
  }
  return P;
}

double SymmetricPolytope::circumradius() const {
  double best = 0.0;
  for (const auto& v : vertices_) best = std::max(best, v.norm());
  return best;
}

Vector SymmetricPolytope::box_halfwidth() const {
  Vector h = Vector::Zero(dim());
  for (const auto& v : vertices_) h = h.cwiseMax(v.cwiseAbs());
  return h;
}

std::vector<std::pair<Index, Index>> SymmetricPolytope::edges() const {
  const Index n = normals_.cols();
  std::vector<std::pair<Index, Index>> out;
  for (std::size_t a = 0; a < vertices_.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
      std::vector<Index> shared;
      std::set_intersection(active_[a].begin(), active_[a].end(),
                            active_[b].begin(), active_[b].end(),
                            std::back_inserter(shared));
      if (static_cast<Index>(shared.size()) >= n - 1)
        out.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
    }
  }
  return out;
}

namespace {

/// Appends u to the candidate list unless (anti)parallel to a kept one.
void push_direction(std::vector<Vector>& dirs, const Vector& u, double tol) {
  for (const auto& v : dirs)
    if ((v - u).norm() < tol || (v + u).norm() < tol) return;
  dirs.push_back(u);
}

SymmetricPolytope body_from_directions(const std::vector<Vector>& dirs,
                                       const std::function<double(const Vector&)>& h) {
  const Index half = static_cast<Index>(dirs.size());
  const Index n = dirs.front().size();
  Matrix normals(2 * half, n);
  Vector offsets(2 * half);
  for (Index i = 0; i < half; ++i) {
    normals.row(i) = dirs[i].transpose();
    normals.row(half + i) = -dirs[i].transpose();
    const double value = h(dirs[i]);
    offsets[i] = value;
    offsets[half + i] = value;
  }
  return SymmetricPolytope::from_halfspaces(normals, offsets);
}

}  // namespace

SymmetricPolytope minkowski_sum(const SymmetricPolytope& P,
                                const SymmetricPolytope& Q) {
  if (P.dim() != Q.dim())
    throw DegenerateInput("minkowski_sum: dimension mismatch");
  const Index n = P.dim();
  if (n >= 4)
    throw DimensionTooLarge("minkowski_sum: supported for n <= 3");

  std::vector<Vector> dirs;
  for (Index i = 0; i < P.facet_count(); ++i)
    push_direction(dirs, P.normals().row(i).transpose(), 1e-10);
  for (Index i = 0; i < Q.facet_count(); ++i)
    push_direction(dirs, Q.normals().row(i).transpose(), 1e-10);
  if (n == 3) {
    // Facets of P+Q can also be spanned by an edge of P and an edge of Q.
    const auto ep = P.edges();
    const auto eq = Q.edges();
    for (const auto& [a, b] : ep) {
      const Vector u = P.vertices()[b] - P.vertices()[a];
      for (const auto& [c, d] : eq) {
        const Vector v = Q.vertices()[d] - Q.vertices()[c];
        Vector w(3);
        w << u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0];
        const double norm = w.norm();
        if (norm < 1e-12) continue;
        push_direction(dirs, w / norm, 1e-10);
      }
    }
  }
  return body_from_directions(
      dirs, [&](const Vector& u) { return P.support(u) + Q.support(u); });
}

namespace {

bool centrally_symmetric_polygon(const std::vector<Vector>& poly, double tol) {
  if (poly.size() % 2 != 0) return false;
  Vector center = Vector::Zero(poly.front().size());
  for (const auto& p : poly) center += p;
  center /= static_cast<double>(poly.size());
  for (const auto& p : poly) {
    const Vector mirrored = 2.0 * center - p;
    bool found = false;
    for (const auto& q : poly)
      if ((mirrored - q).lpNorm<Eigen::Infinity>() < tol) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace

ZonotopeCheck is_zonotope(const SymmetricPolytope& P) {
  ZonotopeCheck out;
  const Index n = P.dim();
  const double tol = 1e-9 * std::max(1.0, P.circumradius());
  if (n == 2) {
    out.zonotope = true;
    return out;
  }
  if (n == 3) {
    for (Index i = 0; i < P.facet_count(); ++i) {
      const Face& F = P.faces()[i];
      if (F.empty()) continue;
      if (!centrally_symmetric_polygon(F.vertices, tol)) {
        out.zonotope = false;
        out.certificate = "asymmetric 2-face of facet " + std::to_string(i) +
                          " (" + std::to_string(F.vertices.size()) +
                          " vertices)";
        return out;
      }
    }
    out.zonotope = true;
    return out;
  }

  // n == 4: 2-faces are doubly active vertex sets over facet pairs.
  std::vector<std::vector<Index>> active(P.vertices().size());
  for (std::size_t v = 0; v < P.vertices().size(); ++v)
    for (Index i = 0; i < P.facet_count(); ++i)
      if (std::abs(P.normals().row(i).dot(P.vertices()[v]) - P.offsets()[i]) <=
          tol)
        active[v].push_back(i);

  for (Index i = 0; i < P.facet_count(); ++i) {
    for (Index j = i + 1; j < P.facet_count(); ++j) {
      std::vector<Vector> poly;
      for (std::size_t v = 0; v < P.vertices().size(); ++v) {
        const auto& act = active[v];
        if (std::binary_search(act.begin(), act.end(), i) &&
            std::binary_search(act.begin(), act.end(), j))
          poly.push_back(P.vertices()[v]);
      }
      if (poly.size() < 3 || affine_rank(poly, 1e-9) != 2) continue;
      if (!centrally_symmetric_polygon(poly, tol)) {
        out.zonotope = false;
        out.certificate = "asymmetric 2-face of facets (" + std::to_string(i) +
                          "," + std::to_string(j) + ")";
        return out;
      }
    }
  }
  out.zonotope = true;
  return out;
}

Zonotope::Zonotope(Matrix generators) : generators_(std::move(generators)) {
  if (generators_.rows() < generators_.cols())
    throw DegenerateGenerators("zonotope: fewer generators than dimensions");
  Eigen::JacobiSVD<Matrix> svd(generators_);
  const auto& sv = svd.singularValues();
  if (sv[generators_.cols() - 1] < 1e-10 * std::max(1.0, sv[0]))
    throw DegenerateGenerators("zonotope: generators do not span the space");
}

SymmetricPolytope Zonotope::realize() const {
  const Index m = generators_.rows();
  const Index n = generators_.cols();

  std::vector<Vector> dirs;
  std::vector<Index> idx(n - 1);
  for (Index i = 0; i < n - 1; ++i) idx[i] = i;
  do {
    Matrix rows(n - 1, n);
    for (Index k = 0; k < n - 1; ++k) rows.row(k) = generators_.row(idx[k]);
    const Vector w = generalized_cross(rows);
    const double norm = w.norm();
    if (norm < 1e-12) continue;
    push_direction(dirs, w / norm, 1e-10);
  } while (combination_next(idx, m));

  return body_from_directions(dirs, [&](const Vector& u) {
    return (generators_ * u).cwiseAbs().sum();
  });
}

}  // namespace wmink
