#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wmink/body.hpp"
#include "wmink/density.hpp"
#include "wmink/integrate.hpp"

namespace wmink {

/// Finite atomic measure on the sphere: one atom per facet normal with the
/// weighted face integral as weight. Zero-weight atoms are retained so solver
/// residuals can reference every target normal.
struct SphericalAtomicMeasure {
  Matrix directions;  // N x n rows, unit
  Vector weights;     // N, nonnegative
  std::string body_id;
  std::string density_id;
  double scale = 1.0;

  Index size() const { return weights.size(); }
  double total_mass() const { return weights.sum(); }
};

/// Weighted surface area measure of P: atom weight_i = integral of the
/// density over face F_i.
SphericalAtomicMeasure sigma(const SymmetricPolytope& P,
                             const WeightedDensity& d);

/// Atoms of sigma(P,d) rescaled by t^{n+r-1}; equals sigma(scale(P,t), d) for
/// an r-homogeneous density.
SphericalAtomicMeasure sigma_scaled(const SymmetricPolytope& P,
                                    const WeightedDensity& d, double t);

/// sum_i |<theta, u_i>| w_i.
double cosine_transform(const SphericalAtomicMeasure& sigma,
                        const Vector& theta);

/// Integral of a test function against the atoms.
double integrate_against(const SphericalAtomicMeasure& sigma,
                         const std::function<double(const Vector&)>& a);

/// Compares integrals of a Lipschitz test function against sigma before and
/// after offset perturbations of size eps. A fixed unit noise profile is
/// scaled by each eps; gaps are averaged over antithetic noise pairs, so the
/// expected gap decays quadratically while the worst single draw decays
/// linearly.
struct PerturbationReport {
  std::vector<double> eps;
  std::vector<double> mean_gap;  // |average signed gap| over antithetic pairs
  std::vector<double> max_gap;   // worst single-draw gap
  bool mean_monotone = false;
  bool max_monotone = false;
};

PerturbationReport perturbation_continuity_check(
    const SymmetricPolytope& P, const WeightedDensity& d,
    const std::function<double(const Vector&)>& a,
    const std::vector<double>& eps_grid, std::uint64_t seed, int draws = 64);

}  // namespace wmink
