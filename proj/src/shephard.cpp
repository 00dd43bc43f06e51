#include "wmink/shephard.hpp"

#include <cmath>

#include "wmink/integrate.hpp"
#include "wmink/projection.hpp"

namespace wmink {

double unit_ball_volume(int n) {
  return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

DominanceResult dominance(const SymmetricPolytope& K,
                          const SymmetricPolytope& L,
                          const WeightedDensity& d, int directions,
                          std::uint64_t seed) {
  const Matrix dirs = sample_directions(K.dim(), directions, seed);
  DominanceResult out;
  out.directions = static_cast<int>(dirs.rows());
  out.delta = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < dirs.rows(); ++i) {
    const Vector theta = dirs.row(i).transpose();
    const double margin = P_mu(L, d, theta) - P_mu(K, d, theta);
    if (margin < out.delta) {
      out.delta = margin;
      out.argmin = theta;
    }
  }
  return out;
}

ComparisonReport shephard_verify(const SymmetricPolytope& K,
                                 const SymmetricPolytope& L,
                                 const WeightedDensity& d, int directions,
                                 std::uint64_t seed) {
  if (!d.is_homogeneous() || !d.concavity_degree())
    throw DomainError(
        "shephard_verify: density needs concavity and homogeneity degrees");

  const auto dom = dominance(K, L, d, directions, seed);
  const auto zono = is_zonotope(L);

  ComparisonReport out;
  out.delta = dom.delta;
  out.argmin = dom.argmin;
  out.directions = dom.directions;
  out.l_is_zonotope = zono.zonotope;
  out.zonotope_certificate = zono.certificate;
  out.mu_k = body_measure_cone(K, d);
  out.mu_l = body_measure_cone(L, d);

  if (!zono.zonotope || dom.delta < 0.0) {
    out.verdict = ComparisonVerdict::hypotheses_not_met;
    return out;
  }
  out.verdict = out.mu_k <= out.mu_l + 1e-9
                    ? ComparisonVerdict::theorem_consistent
                    : ComparisonVerdict::violated;
  return out;
}

CounterexampleReport counterexample_verify(const SymmetricPolytope& K,
                                           const SymmetricPolytope& L,
                                           const WeightedDensity& d,
                                           int directions,
                                           std::uint64_t seed) {
  CounterexampleReport out;
  const auto zono = is_zonotope(L);
  out.l_is_zonotope = zono.zonotope;
  const auto dom = dominance(K, L, d, directions, seed);
  out.delta = dom.delta;
  out.mu_k = body_measure_cone(K, d);
  out.mu_l = body_measure_cone(L, d);

  if (zono.zonotope) {
    out.rejected_clause = "L is a projection body (zonotope certificate holds)";
    return out;
  }
  if (dom.delta < 0.0) {
    out.rejected_clause = "projection dominance fails on samples";
    return out;
  }
  if (!(out.mu_k > out.mu_l)) {
    out.rejected_clause = "mu(K) does not exceed mu(L)";
    return out;
  }
  out.certified = true;
  return out;
}

StabilityConstant StabilityConstant::of(const SymmetricPolytope& L,
                                        const WeightedDensity& d) {
  StabilityConstant c;
  const int n = L.dim();
  c.circumradius = L.circumradius();
  c.nu_n = unit_ball_volume(n);
  c.nu_n_minus_1 = unit_ball_volume(n - 1);
  c.q = 1.0 / (static_cast<double>(n) + d.homogeneity_degree());
  c.value = (c.nu_n / c.nu_n_minus_1) * c.circumradius *
            std::pow(body_measure_cone(L, d), -c.q);
  return c;
}

StabilityReport stability_check(const SymmetricPolytope& K,
                                const SymmetricPolytope& L,
                                const WeightedDensity& d, int directions,
                                std::uint64_t seed) {
  const auto zono = is_zonotope(L);
  if (!zono.zonotope)
    throw DomainError("stability_check: L must be a certified zonotope (" +
                      zono.certificate + ")");

  const auto dom = dominance(K, L, d, directions, seed);
  StabilityReport out;
  out.constant = StabilityConstant::of(L, d);
  out.eps = std::max(0.0, -dom.delta);
  const double q = out.constant.q;
  out.lhs = std::pow(body_measure_cone(K, d), 1.0 - q);
  out.rhs = std::pow(body_measure_cone(L, d), 1.0 - q) +
            out.constant.value * out.eps;
  out.slack = out.rhs - out.lhs;
  out.passed = out.lhs <= out.rhs + 1e-9;
  return out;
}

SeparationReport separation_report(const SymmetricPolytope& K,
                                   const SymmetricPolytope& L,
                                   const WeightedDensity& d, int directions,
                                   std::uint64_t seed) {
  const auto zono = is_zonotope(L);
  if (!zono.zonotope)
    throw DomainError("separation_report: L must be a certified zonotope");

  const auto dom = dominance(K, L, d, directions, seed);
  SeparationReport out;
  if (dom.delta <= 0.0) return out;  // strict margin required
  out.applicable = true;
  out.eps = dom.delta;
  const double q = 1.0 / (static_cast<double>(K.dim()) + d.homogeneity_degree());
  const double lhs = std::pow(body_measure_cone(L, d), 1.0 - q) -
                     std::pow(body_measure_cone(K, d), 1.0 - q);
  out.ratio = lhs / out.eps;
  return out;
}

}  // namespace wmink
