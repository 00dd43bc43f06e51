#pragma once

#include <cstdint>
#include <vector>

#include "wmink/body.hpp"
#include "wmink/density.hpp"
#include "wmink/types.hpp"

namespace wmink {

/// Controls the weighted quadrature over face simplices. Built-in homogeneous
/// densities are integrated exactly: simplices are first split along the
/// density's zero hyperplane so the integrand is polynomial per piece.
struct QuadratureSpec {
  /// Polynomial degree the per-piece rule must integrate exactly.
  int degree = 1;
  /// Uniform refinement depth for smooth non-polynomial integrands.
  int refinement = 0;
  /// Adaptive bisection for integrands with jumps (indicator densities).
  bool adaptive = false;
  double tol = 1e-10;
  /// Hyperplane normals across which the integrand is only piecewise smooth.
  std::vector<Vector> split_hyperplanes;

  static QuadratureSpec for_density(const WeightedDensity& d);
};

/// Integral of the density over the face, exact (to rounding) for the
/// built-in homogeneous kinds.
double face_measure(const Face& F, const WeightedDensity& d);
double face_measure(const Face& F, const WeightedDensity& d,
                    const QuadratureSpec& spec);

Face scale_face(const Face& F, double t);

/// Cone formula mu(P) = 1/(n+r) * sum_i alpha_i mu_{n-1}(F_i) for an
/// r-homogeneous density. Throws NonHomogeneousDensity otherwise.
double body_measure_cone(const SymmetricPolytope& P, const WeightedDensity& d);

struct MCOracle {
  long samples = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  double se = 0.0;  // sample standard deviation / sqrt(samples)
};

/// Rejection sampling on the bounding box of P; reproducible per seed and
/// independent of any sharding of the sample range.
MCOracle body_measure_mc(const SymmetricPolytope& P, const WeightedDensity& d,
                         long samples, std::uint64_t seed);

/// Standard normal CDF, absolute error below 1e-12.
double gaussian_cdf(double a);
/// Inverse of gaussian_cdf by safeguarded Newton; DomainError outside (0,1).
double gaussian_quantile(double u);

/// Monte Carlo estimate of gamma(P) with standard normal sampling.
MCOracle gaussian_body_measure(const SymmetricPolytope& P, long samples,
                               std::uint64_t seed);

/// Gaussian integral over a simplex given as columns (any dimension pair
/// d <= n with d <= 3). Exact for segments, near machine precision for
/// triangles via one-dimensional CDF reduction.
double gaussian_simplex_integral(const Matrix& simplex);

/// Deterministic gamma(P) in the plane by fan triangulation, near machine
/// precision.
double gaussian_polytope_measure_2d(const SymmetricPolytope& P);

/// q-average M_q(a,b;lambda) with the geometric-mean limit at q = 0.
double p_average(double a, double b, double lambda, double q);

}  // namespace wmink
