#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wmink/body.hpp"
#include "wmink/density.hpp"

namespace wmink {

/// Deterministic direction set on the sphere: coordinate axes, the full
/// diagonal set, then a seeded Kronecker low-discrepancy sequence mapped
/// through the normal quantile. Rows are unit vectors; at least `count`
/// directions are returned.
Matrix sample_directions(int n, int count, std::uint64_t seed);

/// p_{mu,K}(theta,t) = (n/2) * integral of |<theta,u>| against sigma of the
/// scaled body tK.
double p_mu(const SymmetricPolytope& K, const WeightedDensity& d,
            const Vector& theta, double t);

/// P_{mu,K}(theta), the t-integral of p over [0,1]. Closed form
/// p(theta,1)/(n+r) for homogeneous densities; composite Simpson refined to
/// tolerance otherwise.
double P_mu(const SymmetricPolytope& K, const WeightedDensity& d,
            const Vector& theta, double tol = 1e-8);

/// Profile evaluator theta -> P_{mu,K}(theta) that hoists the per-body work:
/// for homogeneous densities the atomic surface measure is computed once and
/// each direction costs one cosine transform.
std::function<double(const Vector&)> profile_function(
    const SymmetricPolytope& K, const WeightedDensity& d, double tol = 1e-8);

/// Sampled projection profile for export.
struct ProjectionProfile {
  Matrix directions;      // M x n
  Vector values;          // P_mu per direction
  std::vector<double> t_grid;
  Matrix p_values;        // M x |t_grid| when a grid is requested
};

ProjectionProfile projection_profile(const SymmetricPolytope& K,
                                     const WeightedDensity& d, int directions,
                                     std::uint64_t seed,
                                     const std::vector<double>& t_grid = {});

struct MarginalReport {
  double estimate = 0.0;
  double se = 0.0;
  double reference = 0.0;  // p_mu(theta,t)
  bool passed = false;
};

/// Monte Carlo oracle for p_mu: area-weighted boundary sampling of tK,
/// weighted by (n/2) g(x) |<normal,theta>|. Passes when within 3 SE of the
/// closed-form value.
MarginalReport marginal_check(const SymmetricPolytope& K,
                              const WeightedDensity& d, const Vector& theta,
                              double t, long samples, std::uint64_t seed);

struct ProfileDistance {
  double max_abs_diff = 0.0;
  Vector argmax;
};

/// Sampled sup-distance between the projection profiles of two bodies.
ProfileDistance projection_distance(const SymmetricPolytope& K,
                                    const SymmetricPolytope& L,
                                    const WeightedDensity& d, int directions,
                                    std::uint64_t seed);

}  // namespace wmink
