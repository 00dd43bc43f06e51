#include "wmink/projection.hpp"

#include <algorithm>
#include <cmath>

#include "wmink/integrate.hpp"
#include "wmink/geometry.hpp"
#include "wmink/rng.hpp"

namespace wmink {

Matrix sample_directions(int n, int count, std::uint64_t seed) {
  std::vector<Vector> dirs;
  for (int k = 0; k < n; ++k) {
    Vector e = Vector::Zero(n);
    e[k] = 1.0;
    dirs.push_back(e);
    dirs.push_back(-e);
  }
  const int corners = 1 << n;
  for (int mask = 0; mask < corners; ++mask) {
    Vector v(n);
    for (int k = 0; k < n; ++k) v[k] = (mask >> k) & 1 ? 1.0 : -1.0;
    dirs.push_back(v / v.norm());
  }

  // Kronecker sequence with the generalized plastic-constant increments,
  // pushed through the normal quantile and normalized.
  double phi = 1.5;
  for (int iter = 0; iter < 64; ++iter)
    phi = std::pow(1.0 + phi, 1.0 / (n + 1.0));
  Vector alpha(n), offset(n);
  const CounterRng rng(seed, /*stream=*/30);
  for (int k = 0; k < n; ++k) {
    alpha[k] = std::pow(1.0 / phi, k + 1);
    offset[k] = rng.uniform(static_cast<std::uint64_t>(k));
  }
  for (int j = 0; static_cast<int>(dirs.size()) < count; ++j) {
    Vector z(n);
    for (int k = 0; k < n; ++k) {
      double u = std::fmod(offset[k] + (j + 1) * alpha[k], 1.0);
      u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
      z[k] = gaussian_quantile(u);
    }
    const double norm = z.norm();
    if (norm < 1e-9) continue;
    dirs.push_back(z / norm);
  }

  Matrix out(static_cast<Index>(dirs.size()), n);
  for (std::size_t i = 0; i < dirs.size(); ++i)
    out.row(static_cast<Index>(i)) = dirs[i].transpose();
  return out;
}

double p_mu(const SymmetricPolytope& K, const WeightedDensity& d,
            const Vector& theta, double t) {
  if (t < 0.0) throw DomainError("p_mu: t must be nonnegative");
  if (t == 0.0) return 0.0;
  const double half_n = 0.5 * static_cast<double>(K.dim());
  const QuadratureSpec spec = QuadratureSpec::for_density(d);

  if (d.is_homogeneous()) {
    const double scale = std::pow(
        t, static_cast<double>(K.dim()) + d.homogeneity_degree() - 1.0);
    double acc = 0.0;
    for (Index i = 0; i < K.facet_count(); ++i) {
      const double cosine = std::abs(K.normals().row(i).dot(theta));
      if (cosine < 1e-16) continue;
      acc += cosine * face_measure(K.faces()[i], d, spec);
    }
    return half_n * scale * acc;
  }

  double acc = 0.0;
  for (Index i = 0; i < K.facet_count(); ++i) {
    const double cosine = std::abs(K.normals().row(i).dot(theta));
    if (cosine < 1e-16) continue;
    acc += cosine * face_measure(scale_face(K.faces()[i], t), d, spec);
  }
  return half_n * acc;
}

double P_mu(const SymmetricPolytope& K, const WeightedDensity& d,
            const Vector& theta, double tol) {
  if (d.is_homogeneous()) {
    const double power =
        static_cast<double>(K.dim()) + d.homogeneity_degree();
    return p_mu(K, d, theta, 1.0) / power;
  }

  // Composite Simpson with panel doubling; p(theta, 0) = 0.
  const int max_points = 1 << 14;
  std::vector<double> values(max_points + 1,
                             std::numeric_limits<double>::quiet_NaN());
  auto value_at = [&](int j, int points) {
    const int idx = j * (max_points / points);
    if (std::isnan(values[idx])) {
      const double t = static_cast<double>(j) / points;
      values[idx] = t == 0.0 ? 0.0 : p_mu(K, d, theta, t);
    }
    return values[idx];
  };

  double previous = std::numeric_limits<double>::infinity();
  for (int points = 8; points <= max_points; points *= 2) {
    const double h = 1.0 / points;
    double acc = value_at(0, points) + value_at(points, points);
    for (int j = 1; j < points; j += 2) acc += 4.0 * value_at(j, points);
    for (int j = 2; j < points; j += 2) acc += 2.0 * value_at(j, points);
    const double simpson = acc * h / 3.0;
    if (std::abs(simpson - previous) <= tol * std::max(1.0, std::abs(simpson)))
      return simpson;
    previous = simpson;
  }
  return previous;
}

ProjectionProfile projection_profile(const SymmetricPolytope& K,
                                     const WeightedDensity& d, int directions,
                                     std::uint64_t seed,
                                     const std::vector<double>& t_grid) {
  ProjectionProfile out;
  out.directions = sample_directions(K.dim(), directions, seed);
  const Index M = out.directions.rows();
  out.values.resize(M);
  for (Index i = 0; i < M; ++i)
    out.values[i] = P_mu(K, d, out.directions.row(i).transpose());
  out.t_grid = t_grid;
  if (!t_grid.empty()) {
    out.p_values.resize(M, static_cast<Index>(t_grid.size()));
    for (Index i = 0; i < M; ++i)
      for (std::size_t j = 0; j < t_grid.size(); ++j)
        out.p_values(i, static_cast<Index>(j)) =
            p_mu(K, d, out.directions.row(i).transpose(), t_grid[j]);
  }
  return out;
}

MarginalReport marginal_check(const SymmetricPolytope& K,
                              const WeightedDensity& d, const Vector& theta,
                              double t, long samples, std::uint64_t seed) {
  if (K.dim() > 3)
    throw DimensionTooLarge("marginal_check: boundary sampling for n <= 3");
  const SymmetricPolytope body = K.scaled(t);
  const int n = body.dim();

  // Flatten the simplicial decomposition with cumulative areas.
  struct Piece {
    const Matrix* simplex;
    Vector normal;
    double cumulative;
  };
  std::vector<Piece> pieces;
  double total_area = 0.0;
  for (Index i = 0; i < body.facet_count(); ++i) {
    const Face& F = body.faces()[i];
    for (const auto& S : F.simplices) {
      total_area += simplex_volume(S);
      pieces.push_back({&S, F.normal, total_area});
    }
  }
  if (pieces.empty()) throw DegenerateInput("marginal_check: no faces");

  const CounterRng rng(seed, /*stream=*/31);
  const double half_n = 0.5 * static_cast<double>(n);
  double acc = 0.0, acc_sq = 0.0;
  const int d_face = n - 1;
  std::vector<double> bary(d_face);
  for (long i = 0; i < samples; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(i) * (d_face + 1);
    const double pick = rng.uniform(base) * total_area;
    const auto it = std::lower_bound(
        pieces.begin(), pieces.end(), pick,
        [](const Piece& p, double v) { return p.cumulative < v; });
    const Piece& piece = it == pieces.end() ? pieces.back() : *it;

    for (int k = 0; k < d_face; ++k) bary[k] = rng.uniform(base + 1 + k);
    std::sort(bary.begin(), bary.end());
    Vector x = Vector::Zero(n);
    double prev = 0.0;
    for (int k = 0; k < d_face; ++k) {
      x += (bary[k] - prev) * piece.simplex->col(k);
      prev = bary[k];
    }
    x += (1.0 - prev) * piece.simplex->col(d_face);

    const double value = half_n * total_area * d(x) *
                         std::abs(piece.normal.dot(theta));
    acc += value;
    acc_sq += value * value;
  }

  MarginalReport out;
  out.estimate = acc / static_cast<double>(samples);
  const double var =
      std::max(0.0, acc_sq / samples - out.estimate * out.estimate);
  out.se = std::sqrt(var / static_cast<double>(samples));
  out.reference = p_mu(K, d, theta, t);
  out.passed = std::abs(out.estimate - out.reference) <= 3.0 * out.se + 1e-12;
  return out;
}

ProfileDistance projection_distance(const SymmetricPolytope& K,
                                    const SymmetricPolytope& L,
                                    const WeightedDensity& d, int directions,
                                    std::uint64_t seed) {
  const Matrix dirs = sample_directions(K.dim(), directions, seed);
  ProfileDistance out;
  out.argmax = dirs.row(0).transpose();
  for (Index i = 0; i < dirs.rows(); ++i) {
    const Vector theta = dirs.row(i).transpose();
    const double diff = std::abs(P_mu(K, d, theta) - P_mu(L, d, theta));
    if (diff > out.max_abs_diff) {
      out.max_abs_diff = diff;
      out.argmax = theta;
    }
  }
  return out;
}

}  // namespace wmink
