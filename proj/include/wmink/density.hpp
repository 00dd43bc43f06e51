#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "wmink/types.hpp"

namespace wmink {

enum class DensityKind { lebesgue, abs_linear, power_cone, gaussian, custom };

/// Density g of a weight measure on R^n, with its declared structure:
/// homogeneity degree r (g(ax) = a^r g(x)), concavity degree p of the
/// restriction to the half space {<x,v> > 0}, evenness, and support cone.
/// Declarations are validated by sampling, never inferred.
class WeightedDensity {
 public:
  using Evaluator = std::function<double(const Vector&)>;
  using SupportPredicate = std::function<bool(const Vector&)>;

  static WeightedDensity lebesgue();
  /// g(x) = |<x,theta>|; r = 1, p = 1 on {<x,theta> > 0}, even.
  static WeightedDensity abs_linear(Vector theta);
  /// g(x) = max(<x,theta>,0)^{1/p}; r = 1/p, p-concave on {<x,theta> > 0}.
  static WeightedDensity power_cone(Vector theta, double inv_p);
  /// Standard Gaussian density; carries no homogeneity or concavity degree.
  static WeightedDensity gaussian();
  static WeightedDensity custom(Evaluator g, std::optional<double> r,
                                std::optional<double> p,
                                std::optional<Vector> half_space_normal,
                                bool even, SupportPredicate support = nullptr,
                                std::string label = "custom");

  /// Evaluates g(x); zero outside the support cone.
  double operator()(const Vector& x) const;

  DensityKind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  bool is_homogeneous() const { return r_.has_value(); }
  /// Homogeneity degree r; throws NonHomogeneousDensity when undeclared.
  double homogeneity_degree() const;
  /// Concavity degree p of the half-space restriction (infinity for the
  /// constant density).
  std::optional<double> concavity_degree() const { return p_; }
  std::optional<Vector> half_space_normal() const { return half_space_normal_; }
  /// Cone direction theta of the built-in directional kinds.
  std::optional<Vector> direction() const { return theta_; }
  bool is_even() const { return even_; }

  bool in_support(const Vector& x) const;

  /// Polynomial degree per piece after splitting along zero_hyperplane();
  /// empty for non-polynomial densities.
  std::optional<int> piece_degree() const;
  /// Hyperplane normal across which g is only piecewise smooth.
  std::optional<Vector> zero_hyperplane() const;

 private:
  WeightedDensity() = default;

  DensityKind kind_ = DensityKind::lebesgue;
  Evaluator eval_;
  SupportPredicate support_;
  std::optional<double> r_;
  std::optional<double> p_;
  std::optional<Vector> theta_;
  std::optional<Vector> half_space_normal_;
  bool even_ = true;
  std::string label_;
};

/// Concavity exponent q = 1/(n+r) of the measure induced by an r-homogeneous
/// density in dimension n.
struct ConcavityProfile {
  int n = 0;
  double r = 0.0;
  double q = 0.0;

  static ConcavityProfile of(const WeightedDensity& d, int n);
};

struct HomogeneityReport {
  double max_relative_deviation = 0.0;
  long samples = 0;
  bool passed = false;
};

struct ConcavityReport {
  double worst_violation = 0.0;
  long samples = 0;
  bool passed = false;
};

struct EvennessReport {
  double max_deviation = 0.0;
  long samples = 0;
  bool passed = false;
};

/// Samples a in [0.1,10] and x in the support; reports the largest relative
/// deviation of g(ax) from a^r g(x). Fails above 1e-9.
HomogeneityReport check_homogeneity(const WeightedDensity& d, long samples,
                                    std::uint64_t seed, int n = 0);

/// Samples x, y in the declared half space (intersected with the support) and
/// lambda in (0,1); reports the worst violation of concavity of g^p.
/// Tolerance 1e-10 absolute on g^p values.
ConcavityReport check_p_concavity(const WeightedDensity& d, long samples,
                                  std::uint64_t seed, int n = 0);

/// Verifies g(x+y) >= (g(x)^{1/r} + g(y)^{1/r})^r on sampled pairs, the
/// superadditivity implied by positive degrees of concavity and homogeneity.
ConcavityReport check_implied_concavity(const WeightedDensity& d, long samples,
                                        std::uint64_t seed, int n = 0);

EvennessReport check_evenness(const WeightedDensity& d, long samples,
                              std::uint64_t seed, int n = 0);

}  // namespace wmink
