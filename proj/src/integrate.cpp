#include "wmink/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "wmink/geometry.hpp"
#include "wmink/rng.hpp"

namespace wmink {

namespace {

using ScalarField = std::function<double(const Vector&)>;

/// Gauss-Legendre nodes/weights on [0,1], computed once per point count.
const std::vector<std::pair<double, double>>& gl_rule(int m) {
  static std::map<int, std::vector<std::pair<double, double>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::vector<std::pair<double, double>> rule(m);
  for (int k = 0; k < m; ++k) {
    // Newton iteration on P_m from the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (k + 0.75) / (m + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= m; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double deriv = m * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / deriv;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= m; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    const double deriv = m * (x * p1 - p0) / (x * x - 1.0);
    rule[m - 1 - k] = {0.5 * (x + 1.0), 1.0 / ((1.0 - x * x) * deriv * deriv)};
  }
  return cache.emplace(m, std::move(rule)).first->second;
}

struct SimplexRule {
  /// Barycentric-style nodes in the standard simplex and weights summing to
  /// vol(standard simplex) = 1/d!.
  std::vector<std::pair<Vector, double>> nodes;
};

/// Tensor Gauss-Legendre rule pushed through the Duffy map
/// x_i = t_i * prod_{j<i}(1 - t_j); exact for simplex polynomials of degree
/// k whenever 2m-1 >= k + d - 1.
const SimplexRule& duffy_rule(int d, int m) {
  static std::map<std::pair<int, int>, SimplexRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({d, m});
  if (it != cache.end()) return it->second;

  const auto& line = gl_rule(m);
  SimplexRule rule;
  std::vector<int> digit(d, 0);
  while (true) {
    Vector x(d);
    double w = 1.0;
    double shrink = 1.0;
    for (int i = 0; i < d; ++i) {
      const auto& [t, wt] = line[digit[i]];
      x[i] = t * shrink;
      w *= wt * std::pow(1.0 - t, d - 1 - i);
      shrink *= 1.0 - t;
    }
    rule.nodes.emplace_back(x, w);
    int carry = 0;
    while (carry < d && ++digit[carry] == m) digit[carry++] = 0;
    if (carry == d) break;
  }
  return cache.emplace(std::make_pair(d, m), std::move(rule)).first->second;
}

/// Integral of f over the simplex (columns) with the degree-exact rule.
double rule_integrate(const Matrix& S, const ScalarField& f, int degree) {
  const int d = static_cast<int>(S.cols()) - 1;
  const double vol = simplex_volume(S);
  if (vol <= 0.0) return 0.0;
  const int m = std::max(1, (degree + d + 2) / 2);
  const auto& rule = duffy_rule(d, m);

  Matrix edges(S.rows(), d);
  for (int j = 0; j < d; ++j) edges.col(j) = S.col(j + 1) - S.col(0);
  double factorial = 1.0;
  for (int k = 2; k <= d; ++k) factorial *= k;

  double acc = 0.0;
  for (const auto& [x, w] : rule.nodes) acc += w * f(S.col(0) + edges * x);
  return acc * vol * factorial;
}

double adaptive_integrate(const Matrix& S, const ScalarField& f, double tol,
                          int depth, int max_depth) {
  const double coarse = rule_integrate(S, f, 6);
  const auto [left, right] = bisect_simplex(S);
  const double fine = rule_integrate(left, f, 6) + rule_integrate(right, f, 6);
  if (std::abs(fine - coarse) <= tol || depth >= max_depth) return fine;
  return adaptive_integrate(left, f, 0.5 * tol, depth + 1, max_depth) +
         adaptive_integrate(right, f, 0.5 * tol, depth + 1, max_depth);
}

double refine_integrate(const Matrix& S, const ScalarField& f, int degree,
                        int levels) {
  if (levels <= 0) return rule_integrate(S, f, degree);
  const auto [left, right] = bisect_simplex(S);
  return refine_integrate(left, f, degree, levels - 1) +
         refine_integrate(right, f, degree, levels - 1);
}

std::vector<Matrix> split_by_hyperplanes(const Matrix& S,
                                         const std::vector<Vector>& planes) {
  std::vector<Matrix> pieces = {S};
  for (const auto& theta : planes) {
    std::vector<Matrix> next;
    for (const auto& piece : pieces) {
      auto split = split_simplex(piece, theta);
      next.insert(next.end(), split.nonnegative.begin(),
                  split.nonnegative.end());
      next.insert(next.end(), split.nonpositive.begin(),
                  split.nonpositive.end());
    }
    pieces = std::move(next);
  }
  return pieces;
}

int max_adaptive_depth(int d) { return d == 1 ? 48 : (d == 2 ? 24 : 14); }

}  // namespace

QuadratureSpec QuadratureSpec::for_density(const WeightedDensity& d) {
  QuadratureSpec spec;
  if (auto plane = d.zero_hyperplane()) spec.split_hyperplanes.push_back(*plane);
  if (auto degree = d.piece_degree()) {
    spec.degree = *degree;
    return spec;
  }
  switch (d.kind()) {
    case DensityKind::power_cone:  // non-integer exponent
      spec.degree = 12;
      spec.refinement = 4;
      break;
    case DensityKind::gaussian:
      break;  // handled by the CDF reduction
    default:
      spec.adaptive = true;
      spec.tol = 1e-10;
      spec.degree = 6;
      break;
  }
  return spec;
}

double face_measure(const Face& F, const WeightedDensity& d) {
  return face_measure(F, d, QuadratureSpec::for_density(d));
}

double face_measure(const Face& F, const WeightedDensity& d,
                    const QuadratureSpec& spec) {
  if (F.empty()) return 0.0;
  if (d.kind() == DensityKind::lebesgue && spec.split_hyperplanes.empty())
    return F.area;
  if (d.kind() == DensityKind::gaussian) {
    double acc = 0.0;
    for (const auto& S : F.simplices) acc += gaussian_simplex_integral(S);
    return acc;
  }

  const ScalarField f = [&d](const Vector& x) { return d(x); };
  double acc = 0.0;
  for (const auto& S : F.simplices) {
    for (const auto& piece : split_by_hyperplanes(S, spec.split_hyperplanes)) {
      if (spec.adaptive) {
        const int dim = static_cast<int>(piece.cols()) - 1;
        acc += adaptive_integrate(piece, f, spec.tol, 0,
                                  max_adaptive_depth(dim));
      } else if (spec.refinement > 0) {
        acc += refine_integrate(piece, f, spec.degree, spec.refinement);
      } else {
        acc += rule_integrate(piece, f, spec.degree);
      }
    }
  }
  return acc;
}

Face scale_face(const Face& F, double t) {
  if (!(t > 0.0)) throw DomainError("scale factor must be positive");
  Face out = F;
  out.offset *= t;
  for (auto& v : out.vertices) v *= t;
  for (auto& s : out.simplices) s *= t;
  const int d = F.simplices.empty()
                    ? 0
                    : static_cast<int>(F.simplices.front().cols()) - 1;
  out.area *= std::pow(t, d);
  return out;
}

double body_measure_cone(const SymmetricPolytope& P, const WeightedDensity& d) {
  const double r = d.homogeneity_degree();  // throws for gaussian
  const QuadratureSpec spec = QuadratureSpec::for_density(d);
  double acc = 0.0;
  for (Index i = 0; i < P.facet_count(); ++i)
    acc += P.offsets()[i] * face_measure(P.faces()[i], d, spec);
  return acc / (static_cast<double>(P.dim()) + r);
}

MCOracle body_measure_mc(const SymmetricPolytope& P, const WeightedDensity& d,
                         long samples, std::uint64_t seed) {
  const int n = P.dim();
  const Vector halfwidth = P.box_halfwidth();
  double box_volume = 1.0;
  for (int k = 0; k < n; ++k) box_volume *= 2.0 * halfwidth[k];

  const CounterRng rng(seed, /*stream=*/10);
  const Matrix& normals = P.normals();
  const Vector& offsets = P.offsets();

  double sum = 0.0, sum_sq = 0.0;
  Vector x(n);
  for (long i = 0; i < samples; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(i) * n;
    for (int k = 0; k < n; ++k)
      x[k] = rng.uniform(base + k, -halfwidth[k], halfwidth[k]);
    double value = 0.0;
    if (((normals * x).array() <= offsets.array()).all())
      value = box_volume * d(x);
    sum += value;
    sum_sq += value * value;
  }
  MCOracle out;
  out.samples = samples;
  out.seed = seed;
  out.estimate = sum / static_cast<double>(samples);
  const double var =
      std::max(0.0, sum_sq / samples - out.estimate * out.estimate);
  out.se = std::sqrt(var / static_cast<double>(samples));
  return out;
}

double gaussian_cdf(double a) { return 0.5 * std::erfc(-a * M_SQRT1_2); }

double gaussian_quantile(double u) {
  if (!(u > 0.0) || !(u < 1.0))
    throw DomainError("gaussian_quantile: argument must lie in (0,1)");
  double lo = -40.0, hi = 40.0, x = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double err = gaussian_cdf(x) - u;
    if (err > 0.0)
      hi = x;
    else
      lo = x;
    const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    double next = x - err / std::max(pdf, 1e-300);
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < 1e-15 && std::abs(err) < 1e-14) return next;
    x = next;
  }
  return x;
}

MCOracle gaussian_body_measure(const SymmetricPolytope& P, long samples,
                               std::uint64_t seed) {
  const int n = P.dim();
  const CounterRng rng(seed, /*stream=*/11);
  const Matrix& normals = P.normals();
  const Vector& offsets = P.offsets();

  long hits = 0;
  Vector x(n);
  for (long i = 0; i < samples; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(i) * n;
    for (int k = 0; k < n; ++k) x[k] = rng.normal(base + k);
    if (((normals * x).array() <= offsets.array()).all()) ++hits;
  }
  MCOracle out;
  out.samples = samples;
  out.seed = seed;
  out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  out.se = std::sqrt(std::max(0.0, out.estimate * (1.0 - out.estimate)) /
                     static_cast<double>(samples));
  return out;
}

namespace {

/// Integral of exp(-|y|^2/2) over the triangle with 2-d vertex columns,
/// reduced to one-dimensional CDF differences over vertical strips.
double exp_triangle_integral_2d(Eigen::Vector2d a, Eigen::Vector2d b,
                                Eigen::Vector2d c) {
  if (a.x() > b.x()) std::swap(a, b);
  if (b.x() > c.x()) std::swap(b, c);
  if (a.x() > b.x()) std::swap(a, b);

  const auto line = [](const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                       double t) {
    return p.y() + (q.y() - p.y()) * (t - p.x()) / (q.x() - p.x());
  };
  const auto strip = [&](double t0, double t1, const Eigen::Vector2d& p0,
                         const Eigen::Vector2d& p1, const Eigen::Vector2d& q0,
                         const Eigen::Vector2d& q1) {
    t0 = std::max(t0, -9.5);
    t1 = std::min(t1, 9.5);
    if (t1 - t0 < 1e-14) return 0.0;
    const auto& nodes = gl_rule(16);
    const int panels = std::max(1, static_cast<int>((t1 - t0) / 0.75) + 1);
    const double h = (t1 - t0) / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
      for (const auto& [xi, w] : nodes) {
        const double t = t0 + (p + xi) * h;
        const double y0 = line(p0, p1, t);
        const double y1 = line(q0, q1, t);
        const double lo = std::min(y0, y1);
        const double hi = std::max(y0, y1);
        acc += w * h * std::exp(-0.5 * t * t) *
               (gaussian_cdf(hi) - gaussian_cdf(lo));
      }
    }
    return acc * std::sqrt(2.0 * M_PI);
  };

  double total = 0.0;
  if (b.x() - a.x() > 1e-14) total += strip(a.x(), b.x(), a, b, a, c);
  if (c.x() - b.x() > 1e-14) total += strip(b.x(), c.x(), b, c, a, c);
  return total;
}

}  // namespace

double gaussian_simplex_integral(const Matrix& S) {
  const Index n = S.rows();
  const int d = static_cast<int>(S.cols()) - 1;
  if (simplex_volume(S) <= 0.0) return 0.0;

  // Orthonormal frame of the affine hull; the hull's foot point carries the
  // off-plane Gaussian factor.
  Matrix edges(n, d);
  for (int j = 0; j < d; ++j) edges.col(j) = S.col(j + 1) - S.col(0);
  const Eigen::HouseholderQR<Matrix> qr(edges);
  const Matrix B = qr.householderQ() * Matrix::Identity(n, d);
  const Vector foot = S.col(0) - B * (B.transpose() * S.col(0));
  const double prefactor = std::pow(2.0 * M_PI, -0.5 * static_cast<double>(n)) *
                           std::exp(-0.5 * foot.squaredNorm());

  Matrix y = B.transpose() * S;  // d x (d+1) in-plane coordinates

  if (d == 1) {
    const double lo = std::min(y(0, 0), y(0, 1));
    const double hi = std::max(y(0, 0), y(0, 1));
    return prefactor * std::sqrt(2.0 * M_PI) *
           (gaussian_cdf(hi) - gaussian_cdf(lo));
  }
  if (d == 2) {
    return prefactor * exp_triangle_integral_2d(y.col(0), y.col(1), y.col(2));
  }
  // d == 3 (facets in R^4): refined fixed-order rule on the in-plane simplex.
  Matrix yy = y;
  const ScalarField f = [](const Vector& z) {
    return std::exp(-0.5 * z.squaredNorm());
  };
  return prefactor * refine_integrate(yy, f, 10, 4);
}

double gaussian_polytope_measure_2d(const SymmetricPolytope& P) {
  if (P.dim() != 2)
    throw DimensionTooLarge("gaussian_polytope_measure_2d: n == 2 only");
  std::vector<Vector> verts = P.vertices();
  std::sort(verts.begin(), verts.end(), [](const Vector& a, const Vector& b) {
    return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
  });
  double acc = 0.0;
  const std::size_t m = verts.size();
  for (std::size_t k = 0; k < m; ++k) {
    Matrix tri(2, 3);
    tri.col(0) = Vector::Zero(2);
    tri.col(1) = verts[k];
    tri.col(2) = verts[(k + 1) % m];
    acc += gaussian_simplex_integral(tri);
  }
  return acc;
}

double p_average(double a, double b, double lambda, double q) {
  if (a <= 0.0 || b <= 0.0) {
    if (q > 0.0)
      return std::pow(lambda * std::pow(std::max(a, 0.0), q) +
                          (1.0 - lambda) * std::pow(std::max(b, 0.0), q),
                      1.0 / q);
    return 0.0;
  }
  if (q == 0.0) return std::pow(a, lambda) * std::pow(b, 1.0 - lambda);
  return std::pow(lambda * std::pow(a, q) + (1.0 - lambda) * std::pow(b, q),
                  1.0 / q);
}

}  // namespace wmink
