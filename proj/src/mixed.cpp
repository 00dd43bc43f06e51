#include "wmink/mixed.hpp"

#include <algorithm>
#include <cmath>

#include "wmink/rng.hpp"
#include "wmink/surface_measure.hpp"

namespace wmink {

MixedMeasureResult mixed_measure(const SymmetricPolytope& K,
                                 const SymmetricPolytope& L,
                                 const WeightedDensity& d) {
  const SphericalAtomicMeasure sk = sigma(K, d);
  double acc = 0.0;
  for (Index i = 0; i < sk.size(); ++i)
    acc += sk.weights[i] * L.support(sk.directions.row(i).transpose());

  MixedMeasureResult out;
  out.value = acc;
  out.route = MixedRoute::surface_integral;
  if (d.is_homogeneous()) {
    const double q =
        1.0 / (static_cast<double>(K.dim()) + d.homogeneity_degree());
    out.v_mu1 = q * acc;
  }
  return out;
}

namespace {

/// Difference-indicator Monte Carlo for (gamma(K + eps L) - gamma(K)) / eps
/// with shared normal samples.
OracleEstimate gaussian_difference_quotient(const SymmetricPolytope& sum,
                                            const SymmetricPolytope& K,
                                            double eps, long samples,
                                            std::uint64_t seed) {
  const int n = K.dim();
  const CounterRng rng(seed, /*stream=*/11);
  double acc = 0.0, acc_sq = 0.0;
  Vector x(n);
  for (long i = 0; i < samples; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(i) * n;
    for (int k = 0; k < n; ++k) x[k] = rng.normal(base + k);
    const bool in_sum = ((sum.normals() * x).array() <= sum.offsets().array()).all();
    const bool in_k = ((K.normals() * x).array() <= K.offsets().array()).all();
    const double value =
        (static_cast<double>(in_sum) - static_cast<double>(in_k)) / eps;
    acc += value;
    acc_sq += value * value;
  }
  OracleEstimate out;
  out.value = acc / static_cast<double>(samples);
  const double var = std::max(0.0, acc_sq / samples - out.value * out.value);
  out.se = std::sqrt(var / static_cast<double>(samples));
  return out;
}

}  // namespace

OracleEstimate mixed_measure_oracle(const SymmetricPolytope& K,
                                    const SymmetricPolytope& L,
                                    const WeightedDensity& d,
                                    const std::vector<double>& eps_grid,
                                    long mc_samples, std::uint64_t seed) {
  if (K.dim() > 3)
    throw DimensionTooLarge("mixed_measure_oracle: needs Minkowski sums (n<=3)");
  if (eps_grid.size() != 3)
    throw DomainError("mixed_measure_oracle: expects a 3-point eps grid");

  std::vector<double> diff(3);
  std::vector<double> se(3, 0.0);
  const bool homogeneous = d.is_homogeneous();
  const double mu_k = homogeneous ? body_measure_cone(K, d) : 0.0;

  OracleEstimate out;
  for (int j = 0; j < 3; ++j) {
    const double eps = eps_grid[j];
    const SymmetricPolytope sum = minkowski_sum(K, L.scaled(eps));
    if (homogeneous) {
      diff[j] = (body_measure_cone(sum, d) - mu_k) / eps;
    } else if (d.kind() == DensityKind::gaussian) {
      const auto est =
          gaussian_difference_quotient(sum, K, eps, mc_samples, seed);
      diff[j] = est.value;
      se[j] = est.se;
    } else {
      const auto mc_sum = body_measure_mc(sum, d, mc_samples, seed);
      const auto mc_k = body_measure_mc(K, d, mc_samples, seed);
      diff[j] = (mc_sum.estimate - mc_k.estimate) / eps;
      se[j] = std::sqrt(mc_sum.se * mc_sum.se + mc_k.se * mc_k.se) / eps;
    }
  }

  // Grid is (e, e/2, e/4); two Richardson sweeps remove the O(eps) and
  // O(eps^2) terms of the forward difference.
  const double r1a = 2.0 * diff[1] - diff[0];
  const double r1b = 2.0 * diff[2] - diff[1];
  out.value = (4.0 * r1b - r1a) / 3.0;
  out.se = std::sqrt(64.0 * se[2] * se[2] + 36.0 * se[1] * se[1] +
                     se[0] * se[0]) /
           3.0;
  out.raw_differences = diff;
  return out;
}

MeasureValue measure_of(const SymmetricPolytope& P, const WeightedDensity& d,
                        long mc_samples, std::uint64_t seed) {
  MeasureValue out;
  if (d.is_homogeneous()) {
    out.value = body_measure_cone(P, d);
    out.se = 1e-12 * std::abs(out.value);
    return out;
  }
  if (d.kind() == DensityKind::gaussian) {
    if (P.dim() == 2) {
      out.value = gaussian_polytope_measure_2d(P);
      out.se = 1e-10;
      return out;
    }
    const auto mc = gaussian_body_measure(P, mc_samples, seed);
    out.value = mc.estimate;
    out.se = mc.se;
    return out;
  }
  const auto mc = body_measure_mc(P, d, mc_samples, seed);
  out.value = mc.estimate;
  out.se = mc.se;
  return out;
}

InequalityReport first_inequality_check(const SymmetricPolytope& K,
                                        const SymmetricPolytope& L,
                                        const WeightedDensity& d) {
  const double r = d.homogeneity_degree();
  const double q = 1.0 / (static_cast<double>(K.dim()) + r);
  const double mu_k = body_measure_cone(K, d);
  const double mu_l = body_measure_cone(L, d);

  InequalityReport out;
  out.lhs = mixed_measure(K, L, d).value;
  out.rhs = std::pow(mu_k, 1.0 - q) * std::pow(mu_l, q) / q;
  out.slack = out.lhs - out.rhs;
  out.v_lhs = q * out.lhs;
  out.v_rhs = q * out.rhs;
  out.v_slack = out.v_lhs - out.v_rhs;
  out.passed = out.slack >= -1e-9 && out.v_slack >= -1e-9;
  return out;
}

FConcavity FConcavity::power(double q) {
  FConcavity f;
  f.type = Type::power;
  f.q = q;
  return f;
}

FConcavity FConcavity::log() {
  FConcavity f;
  f.type = Type::log;
  return f;
}

FConcavity FConcavity::ehrhard() {
  FConcavity f;
  f.type = Type::ehrhard;
  return f;
}

double FConcavity::F(double t) const {
  switch (type) {
    case Type::power:
      return std::pow(t, q);
    case Type::log:
      return std::log(t);
    case Type::ehrhard:
      return gaussian_quantile(t);
  }
  return 0.0;
}

double FConcavity::Fprime(double t) const {
  switch (type) {
    case Type::power:
      return q * std::pow(t, q - 1.0);
    case Type::log:
      return 1.0 / t;
    case Type::ehrhard: {
      const double z = gaussian_quantile(t);
      return std::sqrt(2.0 * M_PI) * std::exp(0.5 * z * z);
    }
  }
  return 0.0;
}

double FConcavity::Finv(double y) const {
  switch (type) {
    case Type::power:
      return std::pow(y, 1.0 / q);
    case Type::log:
      return std::exp(y);
    case Type::ehrhard:
      return gaussian_cdf(y);
  }
  return 0.0;
}

FConcaveReport f_concave_first_check(const SymmetricPolytope& K,
                                     const SymmetricPolytope& L,
                                     const WeightedDensity& d,
                                     const FConcavity& F, long mc_samples,
                                     std::uint64_t seed) {
  const MeasureValue mu_k = measure_of(K, d, mc_samples, seed);
  const MeasureValue mu_l = measure_of(L, d, mc_samples, seed + 1);
  const double mu1_kl = mixed_measure(K, L, d).value;
  const double mu1_kk = mixed_measure(K, K, d).value;

  const auto rhs_at = [&](double mk, double ml) {
    return mu1_kk + (F.F(ml) - F.F(mk)) / F.Fprime(mk);
  };

  FConcaveReport out;
  out.lhs = mu1_kl;
  out.rhs = rhs_at(mu_k.value, mu_l.value);
  out.slack = out.lhs - out.rhs;

  // Linear error propagation through numerically estimated partials.
  const double hk = std::max(1e-7 * mu_k.value, 1e-12);
  const double hl = std::max(1e-7 * mu_l.value, 1e-12);
  const double d_mk =
      (rhs_at(mu_k.value + hk, mu_l.value) - rhs_at(mu_k.value - hk, mu_l.value)) /
      (2.0 * hk);
  const double d_ml =
      (rhs_at(mu_k.value, mu_l.value + hl) - rhs_at(mu_k.value, mu_l.value - hl)) /
      (2.0 * hl);
  out.propagated_se =
      std::sqrt(std::pow(d_mk * mu_k.se, 2) + std::pow(d_ml * mu_l.se, 2)) +
      1e-9 * (std::abs(mu1_kl) + std::abs(mu1_kk)) + 1e-12;
  out.passed = out.slack >= -3.0 * out.propagated_se;
  return out;
}

IsoperimetricReport isoperimetric_check(const SymmetricPolytope& K,
                                        const SymmetricPolytope& L,
                                        long mc_samples, std::uint64_t seed) {
  const WeightedDensity gauss = WeightedDensity::gaussian();
  const double target = measure_of(K, gauss, mc_samples, seed).value;

  // gamma(sL) is monotone in s; bracket then bisect.
  double lo = 1e-3, hi = 1.0;
  while (measure_of(L.scaled(hi), gauss, mc_samples, seed + 1).value < target &&
         hi < 1e4)
    hi *= 2.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double value =
        measure_of(L.scaled(mid), gauss, mc_samples, seed + 1).value;
    if (value < target)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-12 * hi) break;
  }
  const double s = 0.5 * (lo + hi);
  const SymmetricPolytope matched = L.scaled(s);
  const MeasureValue matched_measure =
      measure_of(matched, gauss, mc_samples, seed + 1);

  IsoperimetricReport out;
  out.matched_scale = s;
  out.measure_gap = std::abs(matched_measure.value - target);
  out.lhs = mixed_measure(K, matched, gauss).value;
  out.rhs = mixed_measure(K, K, gauss).value;
  out.slack = out.lhs - out.rhs;

  // Sensitivity of the matched comparison to the residual measure mismatch.
  const double boundary_mass = mixed_measure(matched, matched, gauss).value;
  const double slope =
      boundary_mass > 1e-12 ? out.lhs / (s * boundary_mass) : 0.0;
  const double match_err = out.measure_gap + matched_measure.se +
                           measure_of(K, gauss, mc_samples, seed).se;
  out.tolerance = 3.0 * std::abs(slope) * match_err * s +
                  1e-7 * (std::abs(out.lhs) + std::abs(out.rhs)) + 1e-12;
  out.passed = out.slack >= -out.tolerance;
  return out;
}

}  // namespace wmink
