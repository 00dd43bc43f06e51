#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wmink/body.hpp"
#include "wmink/density.hpp"
#include "wmink/integrate.hpp"

namespace wmink {

enum class MixedRoute { surface_integral, finite_difference_oracle };

/// Mixed measure mu_1(K,L), the one-sided derivative of mu(K + eps L) at 0.
struct MixedMeasureResult {
  double value = 0.0;
  MixedRoute route = MixedRoute::surface_integral;
  /// V_{mu,1}(K,L) = q * mu_1(K,L); present for homogeneous densities.
  std::optional<double> v_mu1;
};

/// Surface-integral route: sum over atoms of sigma(K,d) of h_L(u_i) w_i.
MixedMeasureResult mixed_measure(const SymmetricPolytope& K,
                                 const SymmetricPolytope& L,
                                 const WeightedDensity& d);

struct OracleEstimate {
  double value = 0.0;
  double se = 0.0;
  std::vector<double> raw_differences;  // one per eps before extrapolation
};

/// Finite differences of mu(K + eps L) at eps in the grid with Richardson
/// extrapolation. The measure is evaluated by the cone formula for
/// homogeneous densities and by common-sample Gaussian Monte Carlo otherwise.
/// Requires n <= 3 (Minkowski sums).
OracleEstimate mixed_measure_oracle(const SymmetricPolytope& K,
                                    const SymmetricPolytope& L,
                                    const WeightedDensity& d,
                                    const std::vector<double>& eps_grid,
                                    long mc_samples, std::uint64_t seed);

/// Measure value with an uncertainty; exact routes carry a rounding floor.
struct MeasureValue {
  double value = 0.0;
  double se = 0.0;
};

/// mu(P) by the best available route: cone formula when homogeneous,
/// deterministic plane quadrature for the Gaussian in n = 2, Monte Carlo
/// otherwise.
MeasureValue measure_of(const SymmetricPolytope& P, const WeightedDensity& d,
                        long mc_samples, std::uint64_t seed);

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double v_lhs = 0.0;
  double v_rhs = 0.0;
  double v_slack = 0.0;
  bool passed = false;
};

/// Weighted Minkowski first inequality for an r-homogeneous density with
/// q = 1/(n+r):  mu_1(K,L) >= (1/q) mu(K)^{1-q} mu(L)^q, and the integrated
/// form V_{mu,1}(K,L) >= mu(K)^{1-q} mu(L)^q. Slack must be >= -1e-9.
InequalityReport first_inequality_check(const SymmetricPolytope& K,
                                        const SymmetricPolytope& L,
                                        const WeightedDensity& d);

/// Concavity transform F of a measure: power t^q, log t, or the Gaussian
/// quantile psi^{-1} (Ehrhard).
struct FConcavity {
  enum class Type { power, log, ehrhard };
  Type type = Type::power;
  double q = 0.0;

  static FConcavity power(double q);
  static FConcavity log();
  static FConcavity ehrhard();

  double F(double t) const;
  double Fprime(double t) const;
  double Finv(double y) const;
};

struct FConcaveReport {
  double lhs = 0.0;      // mu_1(K,L)
  double rhs = 0.0;      // mu_1(K,K) + (F(mu L) - F(mu K)) / F'(mu K)
  double slack = 0.0;
  double propagated_se = 0.0;
  bool passed = false;
};

/// General first-inequality form mu_1(K,L) >= mu_1(K,K) +
/// (F(mu(L)) - F(mu(K))) / F'(mu(K)) for an F-concave measure.
FConcaveReport f_concave_first_check(const SymmetricPolytope& K,
                                     const SymmetricPolytope& L,
                                     const WeightedDensity& d,
                                     const FConcavity& F, long mc_samples,
                                     std::uint64_t seed);

struct IsoperimetricReport {
  double matched_scale = 1.0;
  double measure_gap = 0.0;  // |gamma(sL) - gamma(K)| after matching
  double lhs = 0.0;          // gamma_1(K, sL)
  double rhs = 0.0;          // gamma_1(K, K)
  double slack = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Gaussian isoperimetric-type comparison: rescales L so gamma(sL) matches
/// gamma(K), then checks gamma_1(K,sL) >= gamma_1(K,K) within the propagated
/// matching error.
IsoperimetricReport isoperimetric_check(const SymmetricPolytope& K,
                                        const SymmetricPolytope& L,
                                        long mc_samples, std::uint64_t seed);

}  // namespace wmink
